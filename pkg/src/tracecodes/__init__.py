"""Binary cyclic codes from trace sequences of permutation polynomials over GF(2^m)."""

__version__ = "0.1.0"
