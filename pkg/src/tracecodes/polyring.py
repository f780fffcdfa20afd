"""Polynomials over GF(2).

Polynomials are stored as Python ints, bit ``i`` holding the coefficient of
``x^i``.  The module-level helpers work on raw ints so the hot loops elsewhere
in the package can call them without wrapping; :class:`BinaryPoly` is the
public value type with operators, parsing and printing.
"""

from __future__ import annotations

import re

from .errors import ConsistencyError, DomainError

MAX_DEGREE = 1 << 20


def degree(p: int) -> int:
    """Degree of ``p``; the zero polynomial has degree -1."""
    return p.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-packed polynomials."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def divmod2(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise DomainError("polynomial division by zero")
    db = degree(b)
    q = 0
    while a and degree(a) >= db:
        shift = degree(a) - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def mod2(a: int, b: int) -> int:
    return divmod2(a, b)[1]


def gcd2(a: int, b: int) -> int:
    while b:
        a, b = b, mod2(a, b)
    return a


def mulmod2(a: int, b: int, m: int) -> int:
    return mod2(clmul(a, b), m)


def powmod2(a: int, e: int, m: int) -> int:
    r = 1
    a = mod2(a, m)
    while e:
        if e & 1:
            r = mulmod2(r, a, m)
        a = mulmod2(a, a, m)
        e >>= 1
    return mod2(r, m)


def reverse_bits(p: int) -> int:
    """Coefficient reversal x^deg(p) * p(1/x), without the constant-term check."""
    if p == 0:
        return 0
    return int(format(p, "b")[::-1], 2)


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(p: int) -> bool:
    """Rabin's test over GF(2)."""
    n = degree(p)
    if n < 1:
        return False
    if n == 1:
        return True
    x = 2
    if powmod2(x, 1 << n, p) != mod2(x, p):
        return False
    for q in prime_factors(n):
        h = powmod2(x, 1 << (n // q), p) ^ mod2(x, p)
        if gcd2(p, h) != 1:
            return False
    return True


def is_primitive(p: int) -> bool:
    """True iff ``p`` is irreducible and x has order 2^deg - 1 modulo ``p``."""
    n = degree(p)
    if not is_irreducible(p):
        return False
    v = (1 << n) - 1
    if n == 1:
        return p == 0b11
    return all(powmod2(2, v // q, p) != 1 for q in prime_factors(v))


# -- text formats -------------------------------------------------------------

_TERM = re.compile(r"^(?:(1)|x(?:\^(\d+))?)$")


def to_terms(p: int) -> str:
    """``x^6+x^2+x+1`` style, descending degree; ``0`` for zero."""
    if p == 0:
        return "0"
    terms = []
    for i in range(degree(p), -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def from_terms(text: str) -> int:
    text = text.replace(" ", "")
    if text == "0":
        return 0
    p = 0
    for tok in text.split("+"):
        match = _TERM.match(tok)
        if not match:
            raise ValueError(f"bad polynomial term {tok!r} in {text!r}")
        i = 0 if match.group(1) else int(match.group(2) or 1)
        if i > MAX_DEGREE:
            raise ValueError(f"degree {i} exceeds cap {MAX_DEGREE}")
        if p >> i & 1:
            raise ValueError(f"repeated term x^{i} in {text!r}")
        p |= 1 << i
    return p


def to_hex(p: int) -> str:
    """Coefficient vector as hex, least significant bit = constant term."""
    return format(p, "x")


def from_hex(text: str) -> int:
    return int(text.removeprefix("0x"), 16)


class BinaryPoly:
    """Immutable polynomial over GF(2)."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("coefficient vector must be nonnegative")
        object.__setattr__(self, "bits", int(bits))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryPoly is immutable")

    @classmethod
    def parse(cls, text: str) -> BinaryPoly:
        return cls(from_terms(text))

    @classmethod
    def from_hex(cls, text: str) -> BinaryPoly:
        return cls(from_hex(text))

    @classmethod
    def from_exponents(cls, exps) -> BinaryPoly:
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @property
    def degree(self) -> int:
        return degree(self.bits)

    def exponents(self) -> list[int]:
        return [i for i in range(self.bits.bit_length()) if self.bits >> i & 1]

    def coeff(self, i: int) -> int:
        return self.bits >> i & 1

    def hex(self) -> str:
        return to_hex(self.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def __call__(self, x: int, field) -> int:
        """Evaluate at field element ``x`` (an int of ``field``) by Horner."""
        acc = 0
        for i in range(self.degree, -1, -1):
            acc = field.mul(acc, x) ^ (self.bits >> i & 1)
        return acc

    def __add__(self, other):
        other = _coerce(other)
        return BinaryPoly(self.bits ^ other.bits)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        other = _coerce(other)
        return BinaryPoly(clmul(self.bits, other.bits))

    __rmul__ = __mul__

    def __divmod__(self, other):
        q, r = poly_divmod(self, _coerce(other))
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        r, a = 1, self.bits
        while e:
            if e & 1:
                r = clmul(r, a)
            a = clmul(a, a)
            e >>= 1
        return BinaryPoly(r)

    def __eq__(self, other):
        if isinstance(other, BinaryPoly):
            return self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __hash__(self):
        return hash(("BinaryPoly", self.bits))

    def __bool__(self):
        return self.bits != 0

    def __str__(self):
        return to_terms(self.bits)

    def __repr__(self):
        return f"BinaryPoly({to_terms(self.bits)!r})"


def _coerce(p) -> BinaryPoly:
    if isinstance(p, BinaryPoly):
        return p
    if isinstance(p, int):
        return BinaryPoly(p)
    if isinstance(p, str):
        return BinaryPoly.parse(p)
    raise TypeError(f"cannot use {type(p).__name__} as a binary polynomial")


def poly_divmod(a: BinaryPoly, b: BinaryPoly) -> tuple[BinaryPoly, BinaryPoly]:
    """Quotient and remainder with ``a = q*b + r`` and ``deg r < deg b``."""
    a, b = _coerce(a), _coerce(b)
    if not b:
        raise DomainError("polynomial division by zero")
    q, r = divmod2(a.bits, b.bits)
    return BinaryPoly(q), BinaryPoly(r)


def poly_gcd(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    return BinaryPoly(gcd2(_coerce(a).bits, _coerce(b).bits))


def reciprocal(p: BinaryPoly) -> BinaryPoly:
    """``x^deg(p) * p(1/x)``; requires a nonzero constant term."""
    p = _coerce(p)
    if not p.bits & 1:
        raise DomainError(f"reciprocal needs a nonzero constant term, got {p}")
    return BinaryPoly(reverse_bits(p.bits))


def xn_plus_1(n: int) -> BinaryPoly:
    return BinaryPoly((1 << n) | 1)


def minimal_polynomial(i: int, spec, cosets=None) -> BinaryPoly:
    """Minimal polynomial of ``alpha^i`` over GF(2).

    Expands the product of ``(x - alpha^s)`` over the cyclotomic coset of
    ``i`` in GF(2^m)[x] and checks every coefficient lands in GF(2).
    """
    v = spec.v
    i %= v
    coset = cosets.coset(i) if cosets is not None else _orbit(i, v)
    # coefficients low to high, as field ints
    coeffs = [1]
    for s in coset:
        root = spec.alpha_pow(s)
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] ^= c
            nxt[k] ^= spec.mul(c, root)
        coeffs = nxt
    bits = 0
    for k, c in enumerate(coeffs):
        if c not in (0, 1):
            raise ConsistencyError(
                f"minimal polynomial of alpha^{i} has a coefficient outside GF(2)"
            )
        bits |= c << k
    return BinaryPoly(bits)


def _orbit(i: int, v: int) -> list[int]:
    out = [i]
    j = 2 * i % v
    while j != i:
        out.append(j)
        j = 2 * j % v
    return out


def factor_xv_minus_1(spec, cosets) -> list[tuple[int, BinaryPoly]]:
    """``x^v + 1`` as ``(leader, minimal polynomial)`` pairs, leaders ascending."""
    return [(i, minimal_polynomial(i, spec, cosets)) for i in cosets.leaders]


def product(polys) -> BinaryPoly:
    r = 1
    for p in polys:
        r = clmul(r, _coerce(p).bits)
    return BinaryPoly(r)
