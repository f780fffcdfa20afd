"""Trace sequences s_t = Tr(F(alpha^t + 1)) and their minimal polynomials.

Two independent analyzers are provided: a discrete Fourier transform over
GF(2^m) (which also yields the index set I_s) and Berlekamp-Massey over GF(2).
Both return the minimal polynomial in connection form
``g_s(x) = prod_{j in I_s} (1 - alpha^j x)``, which for a periodic binary
sequence is monic with constant term 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import families
from .cosets import CosetTable, build_cosets
from .errors import ConsistencyError, UsageError
from .gf2m import FieldSpec
from .polyring import BinaryPoly, minimal_polynomial, product


@dataclass(frozen=True)
class TraceSequence:
    bits: np.ndarray = field(repr=False)
    spec: FieldSpec
    fam: families.FamilyDescriptor | None = None
    extrapolated: bool = False

    @classmethod
    def from_bits(cls, bits, spec: FieldSpec) -> TraceSequence:
        arr = np.asarray(bits, dtype=np.uint8).reshape(-1)
        if arr.size != spec.v:
            raise UsageError(f"need one period of length {spec.v}, got {arr.size}")
        if arr.size and arr.max() > 1:
            raise UsageError("sequence entries must be 0 or 1")
        return cls(arr.copy(), spec)

    @property
    def v(self) -> int:
        return self.spec.v

    def __len__(self):
        return int(self.bits.size)

    def period(self) -> int:
        """Least period; always a divisor of v."""
        v = self.v
        for p in range(1, v + 1):
            if v % p == 0 and np.array_equal(self.bits, np.roll(self.bits, -p)):
                return p
        raise AssertionError("v is always a period")

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


def generate(fam, m: int, spec: FieldSpec | None = None) -> TraceSequence:
    """One period of Tr(F(alpha^t + 1)), t = 0..v-1."""
    fam = families.get_family(fam)
    extrapolated = families.check_m(fam, m)
    spec = spec or families.default_field(fam, m)
    if spec.m != m:
        raise UsageError(f"field has m={spec.m}, sequence requested at m={m}")
    xs = spec.exp[: spec.v] ^ 1
    vals = families.evaluate_all(fam, m, xs, spec)
    bits = spec.trace_table[vals]
    return TraceSequence(bits.astype(np.uint8), spec, fam, extrapolated)


@dataclass(frozen=True)
class SequenceAnalysis:
    minimal_poly: BinaryPoly
    linear_span: int
    index_set: frozenset = frozenset()
    # a_i as field ints, indexed by i in Z_v (DFT variant only)
    dft_coeffs: np.ndarray | None = field(default=None, repr=False, compare=False)
    method: str = "dft"

    def leaders(self, cosets: CosetTable) -> set[int]:
        return cosets.leaders_of(self.index_set)


def dft(bits: np.ndarray, spec: FieldSpec, cosets: CosetTable | None = None) -> np.ndarray:
    """a_i = sum_t s_t alpha^(-i t) for every i in Z_v.

    Only coset leaders are summed directly; the rest of each coset follows
    from a_{2i} = a_i^2, which holds because the s_t lie in GF(2).
    """
    v = spec.v
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.size != v:
        raise UsageError(f"need one period of length {v}, got {bits.size}")
    cosets = cosets or build_cosets(spec.m)
    support = np.flatnonzero(bits).astype(np.int64)
    coeffs = np.zeros(v, dtype=np.int64)
    if support.size == 0:
        return coeffs
    for lead in cosets.leaders:
        a = int(np.bitwise_xor.reduce(spec.exp[(-lead * support) % v]))
        if a == 0:
            continue
        la = int(spec.log[a])
        j = lead
        while True:
            coeffs[j] = spec.exp[la]
            j = 2 * j % v
            la = 2 * la % v
            if j == lead:
                break
    return coeffs


def inverse_dft(coeffs: np.ndarray, spec: FieldSpec) -> np.ndarray:
    """s_t = sum_i a_i alpha^(i t); raises if a value leaves GF(2)."""
    v = spec.v
    coeffs = np.asarray(coeffs, dtype=np.int64)
    idx = np.flatnonzero(coeffs)
    logs = spec.log[coeffs[idx]]
    out = np.zeros(v, dtype=np.int64)
    for t in range(v):
        if idx.size:
            out[t] = np.bitwise_xor.reduce(spec.exp[(logs + idx * t) % v])
    if out.max(initial=0) > 1:
        raise ConsistencyError("inverse transform left GF(2)")
    return out.astype(np.uint8)


def expand_connection_poly(index_set, spec: FieldSpec) -> BinaryPoly:
    """prod_{j} (1 + alpha^j x) over GF(2^m); every coefficient must be 0 or 1."""
    v = spec.v
    coeffs = np.zeros(len(index_set) + 1, dtype=np.int64)
    coeffs[0] = 1
    deg = 0
    exp, log = spec.exp, spec.log
    for j in sorted(index_set):
        # c_k <- c_k + alpha^j c_{k-1}
        prev = coeffs[:deg + 1]
        nz = prev != 0
        shifted = np.where(nz, exp[(log[prev] + j) % v], 0)
        coeffs[1:deg + 2] ^= shifted
        deg += 1
    if coeffs.max(initial=0) > 1:
        raise ConsistencyError("minimal polynomial has a coefficient outside GF(2)")
    bits = 0
    for k in np.flatnonzero(coeffs):
        bits |= 1 << int(k)
    return BinaryPoly(bits)


def analyze_dft(seq: TraceSequence) -> SequenceAnalysis:
    spec = seq.spec
    cosets = build_cosets(spec.m)
    coeffs = dft(seq.bits, spec, cosets)
    index_set = frozenset(int(i) for i in np.flatnonzero(coeffs))
    poly = expand_connection_poly(index_set, spec)
    if poly.degree != len(index_set):
        raise ConsistencyError("degree of g_s differs from |I_s|")
    return SequenceAnalysis(poly, len(index_set), index_set, coeffs, "dft")


def berlekamp_massey(bits) -> tuple[int, int]:
    """Shortest LFSR over GF(2): returns (connection poly bits, length L).

    The connection polynomial C(x) = 1 + c_1 x + ... satisfies
    s_n = c_1 s_{n-1} + ... + c_L s_{n-L} for all n >= L.
    """
    c, b = 1, 1
    L, shift = 0, 1
    window = 0  # bit k holds s_{n-k}
    for n, s in enumerate(bits):
        window = (window << 1) | int(s)
        if (c & window).bit_count() & 1:
            t = c
            c ^= b << shift
            if 2 * L <= n:
                L = n + 1 - L
                b = t
                shift = 1
            else:
                shift += 1
        else:
            shift += 1
    return c, L


def analyze_bm(seq: TraceSequence) -> SequenceAnalysis:
    """Berlekamp-Massey on two periods; index set and coefficients stay empty."""
    doubled = np.concatenate([seq.bits, seq.bits])
    c, L = berlekamp_massey(doubled.tolist())
    poly = BinaryPoly(c)
    if poly.degree > L:
        raise ConsistencyError("connection polynomial exceeds the LFSR length")
    # For a periodic sequence the top coefficient c_L is nonzero.
    if poly.degree != L:
        raise ConsistencyError("periodic sequence gave a singular connection polynomial")
    return SequenceAnalysis(poly, L, frozenset(), None, "bm")


def annihilates(poly: BinaryPoly, bits) -> bool:
    """sum_k g_k s_{t-k} = 0 for every t, read cyclically over one period."""
    bits = np.asarray(bits, dtype=np.uint8)
    acc = np.zeros(bits.size, dtype=np.uint8)
    for k in poly.exponents():
        acc ^= np.roll(bits, k)
    return not acc.any()


def assemble_generator(index_set, spec: FieldSpec, cosets: CosetTable | None = None) -> BinaryPoly:
    """prod over leaders i of I_s of m_{alpha^{-i}}(x), with x+1 for i = 0."""
    cosets = cosets or build_cosets(spec.m)
    leaders = sorted(cosets.leaders_of(index_set))
    return product(minimal_polynomial(-i % spec.v, spec, cosets) for i in leaders)


def analyze(seq: TraceSequence, verify: bool = True) -> SequenceAnalysis:
    """DFT analysis, cross-checked against Berlekamp-Massey when ``verify``."""
    res = analyze_dft(seq)
    if verify:
        bm = analyze_bm(seq)
        if bm.minimal_poly != res.minimal_poly:
            raise ConsistencyError(
                f"BM and DFT disagree: {bm.minimal_poly} vs {res.minimal_poly}")
    return res
