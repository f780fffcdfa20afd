"""Arithmetic in GF(2^m), 2 <= m <= 20, polynomial basis.

Elements are ints below ``2^m``; the field object carries the reduction
polynomial, the chosen primitive element and its exp/log tables.  The hot
paths (sequence generation, DFT) index the numpy tables directly.
"""

from __future__ import annotations

import functools
from pathlib import Path

import numpy as np

from . import polyring
from .errors import DomainError, UsageError
from .polyring import BinaryPoly

MIN_M, MAX_M = 2, 20

# Reduction polynomials per m.  m=8 keeps x^8+x^4+x^3+x+1, which is
# irreducible but not primitive, so it is paired with an explicit generator.
# All others are primitive.
DEFAULT_MODULI = {
    2: "x^2+x+1",
    3: "x^3+x+1",
    4: "x^4+x+1",
    5: "x^5+x^2+1",
    6: "x^6+x+1",
    7: "x^7+x+1",
    8: "x^8+x^4+x^3+x+1",
    9: "x^9+x^4+1",
    10: "x^10+x^3+1",
    11: "x^11+x^2+1",
    12: "x^12+x^6+x^4+x+1",
    13: "x^13+x^4+x^3+x+1",
    14: "x^14+x^10+x^6+x+1",
    15: "x^15+x+1",
    16: "x^16+x^12+x^3+x+1",
    17: "x^17+x^3+1",
    18: "x^18+x^7+1",
    19: "x^19+x^5+x^2+x+1",
    20: "x^20+x^3+1",
}

# Minimal polynomial of the default primitive element alpha.  The printed
# example polynomials are reproduced with alpha a root of the Conway
# polynomial of each field; where that differs from the reduction polynomial,
# alpha is taken as the smallest root of it inside the field.
DEFAULT_ALPHA_MINPOLY = {
    6: "x^6+x^4+x^3+x+1",
    7: "x^7+x+1",
    8: "x^8+x^4+x^3+x^2+1",
}

ALT_MODULUS_M7 = "x^7+x^3+1"


class FieldSpec:
    """GF(2^m) with a fixed modulus and primitive element ``alpha``.

    ``alpha`` defaults to the class of ``x``; in that case the modulus must be
    primitive.  Tables are built once and never mutated.
    """

    def __init__(self, m: int, modulus: int | str | BinaryPoly | None = None,
                 generator: int | str | BinaryPoly | None = None):
        if not MIN_M <= m <= MAX_M:
            raise UsageError(f"m must lie in [{MIN_M}, {MAX_M}], got {m}")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
            if generator is None:
                generator = default_generator(m, modulus)
        modulus = _as_bits(modulus)
        if polyring.degree(modulus) != m:
            raise UsageError(f"modulus {polyring.to_terms(modulus)} does not have degree {m}")
        if not polyring.is_irreducible(modulus):
            raise UsageError(f"modulus {polyring.to_terms(modulus)} is reducible")
        gen = 2 if generator is None else _as_bits(generator)
        if not 0 < gen < 1 << m:
            raise UsageError("generator must be a nonzero field element")
        self.m = m
        self.v = (1 << m) - 1
        self.size = 1 << m
        self.modulus = modulus
        self.generator = gen
        self._build_tables()

    def _build_tables(self):
        v, m, mod = self.v, self.m, self.modulus
        exp = np.zeros(v + 1, dtype=np.int64)
        log = np.full(self.size, -1, dtype=np.int64)
        a = 1
        gen = self.generator
        top = 1 << m
        for t in range(v):
            exp[t] = a
            if log[a] >= 0:
                raise UsageError(
                    f"alpha={polyring.to_terms(gen)} has order {t} < {v} modulo "
                    f"{polyring.to_terms(mod)}"
                )
            log[a] = t
            if gen == 2:
                a <<= 1
                if a & top:
                    a ^= mod
            else:
                a = self.mul_shift(a, gen)
        exp[v] = exp[0]
        self.exp = exp
        self.log = log
        # Tr is GF(2)-linear: Tr(a) = parity(a & mask), mask bit j = Tr(x^j).
        mask = 0
        for j in range(m):
            mask |= self._trace_by_frobenius(1 << j) << j
        self.trace_mask = mask
        self.trace_table = (np.bitwise_count(np.arange(self.size, dtype=np.int64) & mask) & 1).astype(np.uint8)

    # -- identity ---------------------------------------------------------

    @property
    def modulus_poly(self) -> BinaryPoly:
        return BinaryPoly(self.modulus)

    @property
    def alpha(self) -> int:
        return self.generator

    @property
    def alpha_minpoly(self) -> BinaryPoly:
        """Minimal polynomial of alpha; equals the modulus when alpha = x."""
        return polyring.minimal_polynomial(1, self)

    def key(self) -> tuple[int, int, int]:
        return (self.m, self.modulus, self.generator)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        gen = "" if self.generator == 2 else f", alpha={polyring.to_terms(self.generator)}"
        return f"FieldSpec(m={self.m}, modulus={polyring.to_terms(self.modulus)}{gen})"

    # -- arithmetic on ints -----------------------------------------------

    def mul_shift(self, a: int, b: int) -> int:
        """Shift-and-xor product, independent of the tables."""
        r = 0
        top = 1 << self.m
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.modulus
        return r

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % self.v])

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no inverse")
        return int(self.exp[(-self.log[a]) % self.v])

    def pow(self, a: int, e: int) -> int:
        """``a^e`` by square-and-multiply; negative ``e`` inverts first."""
        if e < 0:
            if a == 0:
                raise DomainError("negative power of zero")
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def alpha_pow(self, t: int) -> int:
        return int(self.exp[t % self.v])

    def dlog(self, a: int) -> int:
        if a == 0:
            raise DomainError("discrete log of zero")
        return int(self.log[a])

    def trace(self, a: int) -> int:
        return int(self.trace_table[a])

    def _trace_by_frobenius(self, a: int) -> int:
        acc, t = a, a
        for _ in range(self.m - 1):
            t = self.mul_shift(t, t)
            acc ^= t
        if acc not in (0, 1):
            raise AssertionError("trace left the prime field")
        return acc

    def trace_by_frobenius(self, a: int) -> int:
        """Tr(a) = a + a^2 + ... + a^(2^(m-1)) computed literally."""
        return self._trace_by_frobenius(a)

    def element(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def elements(self):
        return (FieldElement(a, self) for a in range(self.size))


class FieldElement:
    """A GF(2^m) element bound to its field; mixing fields is a usage error."""

    __slots__ = ("value", "spec")

    def __init__(self, value: int, spec: FieldSpec):
        if not 0 <= value < spec.size:
            raise UsageError(f"{value} is not an element of GF(2^{spec.m})")
        self.value = value
        self.spec = spec

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.value >> j & 1 for j in range(self.spec.m))

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise UsageError("operands belong to different fields")
            return other.value
        if other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.value ^ b, self.spec)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec.mul(self.value, b), self.spec)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return FieldElement(self.spec.pow(self.value, e), self.spec)

    def __truediv__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec.mul(self.value, self.spec.inv(b)), self.spec)

    def trace(self) -> int:
        return self.spec.trace(self.value)

    def dlog(self) -> int:
        return self.spec.dlog(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.key(), self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({polyring.to_terms(self.value)}, m={self.spec.m})"


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def pow(a: FieldElement, e: int) -> FieldElement:  # noqa: A001 - mirrors the field op name
    return a ** e


def trace(a: FieldElement) -> int:
    return a.trace()


def dlog(a: FieldElement) -> int:
    return a.dlog()


def find_root(modulus, minpoly, m: int) -> int:
    """Smallest field element (mod ``modulus``) that is a root of ``minpoly``."""
    modulus, minpoly = _as_bits(modulus), _as_bits(minpoly)
    coeffs = [minpoly >> i & 1 for i in range(polyring.degree(minpoly), -1, -1)]
    for a in range(1, 1 << m):
        acc = 0
        for c in coeffs:
            acc = polyring.mulmod2(acc, a, modulus) ^ c
        if acc == 0:
            return a
    raise UsageError(f"{polyring.to_terms(minpoly)} has no root modulo "
                     f"{polyring.to_terms(modulus)}")


def default_generator(m: int, modulus) -> int | None:
    """Generator matching DEFAULT_ALPHA_MINPOLY, or None for alpha = x.

    A non-primitive modulus without a table entry gets the smallest
    primitive element instead.
    """
    modulus = _as_bits(modulus)
    target = DEFAULT_ALPHA_MINPOLY.get(m)
    if target is not None:
        if _as_bits(target) == modulus:
            return None
        return find_root(modulus, target, m)
    if polyring.is_primitive(modulus):
        return None
    return _smallest_primitive(m, modulus)


def _smallest_primitive(m: int, modulus: int) -> int:
    v = (1 << m) - 1
    qs = polyring.prime_factors(v)
    for a in range(2, 1 << m):
        if all(polyring.powmod2(a, v // q, modulus) != 1 for q in qs):
            return a
    raise UsageError("modulus is not irreducible")


def _as_bits(p) -> int:
    if isinstance(p, BinaryPoly):
        return p.bits
    if isinstance(p, str):
        return polyring.from_terms(p)
    return int(p)


# -- configuration -------------------------------------------------------------

def parse_config(text: str) -> dict[int, dict[str, str]]:
    """Parse ``m=7 poly=x^7+x^3+1 [alpha=x+1 | alpha_minpoly=x^7+x+1]`` lines.

    ``#`` starts a comment.
    """
    out: dict[int, dict[str, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = dict(tok.split("=", 1) for tok in line.split() if "=" in tok)
        if "m" not in fields or "poly" not in fields:
            raise UsageError(f"config line {lineno}: need m=... and poly=...")
        m = int(fields["m"])
        entry = {"poly": fields["poly"]}
        for key in ("alpha", "alpha_minpoly"):
            if key in fields:
                entry[key] = fields[key]
        out[m] = entry
    return out


def load_config(path: str | Path) -> dict[int, dict[str, str]]:
    return parse_config(Path(path).read_text(encoding="utf-8"))


@functools.lru_cache(maxsize=None)
def _cached_field(m: int, modulus: int, generator: int | None) -> FieldSpec:
    return FieldSpec(m, modulus, generator)


def get_field(m: int, poly: str | int | None = None, alpha: str | int | None = None,
              config: dict[int, dict[str, str]] | None = None,
              alpha_minpoly: str | int | None = None) -> FieldSpec:
    """Shared, cached field for ``m``.

    Precedence: explicit ``poly``/``alpha``, then a config entry for ``m``,
    then the bundled tables.  Without an explicit alpha, alpha is a root of
    ``alpha_minpoly`` when given; otherwise the bundled default when no
    modulus was requested, else the class of x (or the smallest primitive
    element if the requested modulus is not primitive).
    """
    if poly is None and config and m in config:
        entry = config[m]
        poly = entry["poly"]
        alpha = alpha if alpha is not None else entry.get("alpha")
        if alpha_minpoly is None:
            alpha_minpoly = entry.get("alpha_minpoly")
    if not MIN_M <= m <= MAX_M:
        raise UsageError(f"m must lie in [{MIN_M}, {MAX_M}], got {m}")
    bundled = poly is None
    modulus = _as_bits(DEFAULT_MODULI[m] if bundled else poly)
    if alpha is not None:
        gen = _as_bits(alpha)
    elif alpha_minpoly is not None:
        gen = find_root(modulus, alpha_minpoly, m) if _as_bits(alpha_minpoly) != modulus else None
    elif bundled:
        gen = default_generator(m, modulus)
    elif polyring.is_irreducible(modulus) and not polyring.is_primitive(modulus):
        gen = _smallest_primitive(m, modulus)
    else:
        gen = None
    return _cached_field(m, modulus, gen)
