"""Binary cyclic codes of length v = 2^m - 1 given by a generator polynomial.

A code is stored as its generator g(x) | x^n + 1, the check polynomial
h(x) = (x^n + 1)/g(x), and the defining set Z = {i : g(alpha^i) = 0}.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..cosets import build_cosets
from ..errors import UsageError
from ..gf2m import FieldSpec
from ..polyring import BinaryPoly, _coerce, poly_divmod, reciprocal, xn_plus_1


@dataclass(frozen=True)
class Distance:
    """Minimum distance, exact when ``lo == hi``."""
    lo: int
    hi: int
    method: str = ""

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def kind(self) -> str:
        return "exact" if self.exact else "interval"

    def contains(self, d: int) -> bool:
        return self.lo <= d <= self.hi

    def as_dict(self) -> dict:
        return {"kind": self.kind, "lo": self.lo, "hi": self.hi, "method": self.method}

    def __str__(self):
        return str(self.lo) if self.exact else f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class CodeRecord:
    n: int
    k: int
    generator: BinaryPoly
    check_poly: BinaryPoly
    defining_set: frozenset = field(repr=False)
    spec: FieldSpec = field(repr=False, compare=False)
    distance: Distance | None = None

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def is_even_weight(self) -> bool:
        """True when (x + 1) | g, i.e. every codeword has even weight."""
        return 0 in self.defining_set

    def defining_leaders(self) -> list[int]:
        return sorted(build_cosets(self.spec.m).leaders_of(self.defining_set))

    def with_distance(self, dist: Distance) -> CodeRecord:
        return replace(self, distance=dist)

    def params(self) -> str:
        d = "" if self.distance is None else f",{self.distance}"
        return f"[{self.n},{self.k}{d}]"


def defining_set(g: BinaryPoly, spec: FieldSpec) -> frozenset:
    """All i in Z_v with g(alpha^i) = 0, by direct evaluation."""
    v = spec.v
    i = np.arange(v, dtype=np.int64)
    acc = np.zeros(v, dtype=np.int64)
    for e in g.exponents():
        acc ^= spec.exp[(e * i) % v]
    return frozenset(int(z) for z in np.flatnonzero(acc == 0))


def build_code(g, spec: FieldSpec) -> CodeRecord:
    """Cyclic code of length v generated by ``g``; ``g`` must divide x^v + 1."""
    g = _coerce(g)
    n = spec.v
    if not g or g.degree > n:
        raise UsageError(f"{g} cannot generate a code of length {n}")
    h, r = poly_divmod(xn_plus_1(n), g)
    if r:
        raise UsageError(f"{g} does not divide x^{n}+1")
    zs = defining_set(g, spec)
    return CodeRecord(n, n - g.degree, g, h, zs, spec)


def dual(code: CodeRecord) -> CodeRecord:
    """The dual code, generated by the reciprocal of h (constant term 1)."""
    return build_code(reciprocal(code.check_poly), code.spec)


def generator_rows(code: CodeRecord) -> list[int]:
    """Rows x^i g(x), i < k, as n-bit ints (bit j = coefficient of x^j)."""
    return [code.generator.bits << i for i in range(code.k)]


def systematic_rows(code: CodeRecord) -> list[int]:
    """Systematic basis with the message on positions n-k .. n-1.

    Row i is x^(n-k+i) + (x^(n-k+i) mod g); its low n-k bits are parity.
    """
    r = code.redundancy
    g = code.generator.bits
    rows = []
    rem = 1 << r
    # x^r mod g, then multiply by x each step
    rem = poly_divmod(BinaryPoly(rem), code.generator)[1].bits
    for i in range(code.k):
        rows.append((1 << (r + i)) | rem)
        rem <<= 1
        if rem >> r & 1:
            rem ^= g
    return rows


def encode(code: CodeRecord, message: int) -> int:
    """Non-systematic encoding c(x) = m(x) g(x) as an n-bit int."""
    if message >> code.k:
        raise UsageError(f"message has more than k={code.k} bits")
    return (BinaryPoly(message) * code.generator).bits


def is_codeword(code: CodeRecord, word: int) -> bool:
    return not poly_divmod(BinaryPoly(word), code.generator)[1]
