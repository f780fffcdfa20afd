"""Exception types shared across the package."""


class TraceCodesError(Exception):
    pass


class UsageError(TraceCodesError, ValueError):
    """Caller broke a precondition (mismatched fields, bad ranges, ...)."""


class DomainError(TraceCodesError, ArithmeticError):
    """Mathematically undefined request: inverse of zero, division by zero, ..."""


class UnsupportedPrediction(TraceCodesError):
    """No closed form covers the requested (family, m)."""


class ConsistencyError(TraceCodesError, RuntimeError):
    """An internal self-check failed; indicates a bug, not bad input."""
