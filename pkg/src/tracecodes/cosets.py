"""2-cyclotomic cosets modulo v = 2^m - 1 and the odd-index bookkeeping
(``Gamma_(t)``, ``eps``, ``kappa``, ``B`` sets) used to collapse sums of
consecutive powers under the trace.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from .errors import UsageError


class CosetTable:
    """Partition of Z_v into cyclotomic cosets.

    ``coset_of`` is a flat array mapping every residue to its leader.
    """

    def __init__(self, m: int):
        if not 2 <= m <= 20:
            raise UsageError(f"m must lie in [2, 20], got {m}")
        v = (1 << m) - 1
        self.m = m
        self.v = v
        coset_of = np.full(v, -1, dtype=np.int64)
        leaders = []
        sizes = {}
        for i in range(v):
            if coset_of[i] >= 0:
                continue
            j, n = i, 0
            while True:
                coset_of[j] = i
                n += 1
                j = 2 * j % v
                if j == i:
                    break
            leaders.append(i)
            sizes[i] = n
        self.coset_of = coset_of
        self.leaders = leaders
        self.size_of = sizes

    def leader(self, i: int) -> int:
        return int(self.coset_of[i % self.v])

    def size(self, i: int) -> int:
        return self.size_of[self.leader(i)]

    def coset(self, i: int) -> list[int]:
        i %= self.v
        out = [i]
        j = 2 * i % self.v
        while j != i:
            out.append(j)
            j = 2 * j % self.v
        return out

    def same_coset(self, i: int, j: int) -> bool:
        return self.leader(i) == self.leader(j)

    def union(self, leaders) -> set[int]:
        out: set[int] = set()
        for i in leaders:
            out.update(self.coset(i))
        return out

    def leaders_of(self, indices) -> set[int]:
        return {self.leader(i) for i in indices}

    def total_size(self, leaders) -> int:
        return sum(self.size(i) for i in leaders)

    def __repr__(self):
        return f"CosetTable(m={self.m}, {len(self.leaders)} cosets)"


@functools.lru_cache(maxsize=None)
def build_cosets(m: int) -> CosetTable:
    return CosetTable(m)


def weight2(i: int) -> int:
    """Number of ones in the binary expansion of ``i``."""
    if i < 0:
        raise UsageError("2-weight of a negative integer")
    return i.bit_count()


def gamma_set(t: int) -> list[int]:
    """Odd integers in [1, 2^t - 1]; empty for t < 1."""
    if t < 1:
        return []
    return list(range(1, 1 << t, 2))


@dataclass(frozen=True)
class GammaMachinery:
    t: int
    gamma_t: tuple[int, ...]
    eps: dict[int, int] = field(repr=False)
    kappa: dict[int, int] = field(repr=False)
    b_sets: dict[int, tuple[int, ...]] = field(repr=False)

    def collapsed_exponents(self) -> list[int]:
        """Odd ``j`` surviving in Tr(sum_{i=1}^{2^t-1} x^i) = sum kappa_j Tr(x^j)."""
        return [j for j in self.gamma_t if self.kappa[j]]


def _eps(j: int, t: int) -> int:
    top = (1 << t) - 1
    if j == top:
        return 1
    # ceil(log2(top / j)) in exact integer arithmetic
    e = 0
    while j << e < top:
        e += 1
    return e


@functools.lru_cache(maxsize=None)
def build_gamma(t: int) -> GammaMachinery:
    if t < 1:
        raise UsageError(f"t must be positive, got {t}")
    gam = tuple(gamma_set(t))
    eps = {j: _eps(j, t) for j in gam}
    kappa = {j: e % 2 for j, e in eps.items()}
    b_sets = {j: tuple(j << i for i in range(eps[j])) for j in gam}
    return GammaMachinery(t, gam, eps, kappa, b_sets)


def rotation_exponent(i: int, j: int, cosets: CosetTable) -> int | None:
    """The ``lam`` in [0, size) with ``i * 2^lam = j (mod v)``, else None."""
    v = cosets.v
    i %= v
    j %= v
    if not cosets.same_coset(i, j):
        return None
    x = i
    for lam in range(cosets.size(j)):
        if x == j:
            return lam
        x = 2 * x % v
    raise AssertionError("coset table inconsistent")


# -- relation harness ------------------------------------------------------------
#
# Each relation predicts coset behaviour of shifted indices from a closed
# rule.  The production code never consults these predictions; tests compare
# them against the brute-force coset table.

@dataclass(frozen=True)
class CosetVerdict:
    relation: str
    m: int
    i: int | None
    j: int
    predicted: object
    actual: object
    note: str = ""

    @property
    def agrees(self) -> bool:
        return self.predicted == self.actual


def _odd_part(i: int) -> tuple[int, int]:
    s = (i & -i).bit_length() - 1
    return s, i >> s


def _shift_rule(i: int, j: int, top: int, s_values, i1_bound) -> bool:
    """True iff i = 2^s i1, j = i1 + 2^(top - s) for some allowed s, odd i1."""
    if i <= 0:
        return False
    s, i1 = _odd_part(i)
    return s in s_values and 1 <= i1 <= i1_bound(s) and j == i1 + (1 << (top - s))


ODD_RELATIONS = (
    "shifted_pairs",
    "shifted_vs_odd",
    "kasami_leader",
    "kasami_shifted_vs_high",
    "kasami_odd_vs_high",
    "kasami_shifted_vs_odd",
)
EVEN_RELATIONS = (
    "even_shifted_pairs",
    "even_high_leader",
    "even_high_vs_odd",
)
RELATIONS = ODD_RELATIONS + EVEN_RELATIONS


def relation_domain(relation: str, m: int) -> list[tuple[int | None, int]]:
    """All ``(i, j)`` pairs inside the stated range of ``relation``."""
    if relation in ODD_RELATIONS and m % 2 == 0 or relation in EVEN_RELATIONS and m % 2:
        return []
    h = (m - 1) // 2 if m % 2 else m // 2
    a_set = list(range(1, 1 << (h - 1))) if h >= 1 else []
    gh = gamma_set(h)
    if relation == "shifted_pairs":
        return [(i, j) for i in a_set for j in a_set if i != j]
    if relation == "shifted_vs_odd":
        return [(i, j) for i in a_set for j in a_set if j % 2]
    if relation in ("kasami_leader", "kasami_odd_vs_high", "even_high_leader"):
        return [(None, j) for j in gh]
    if relation == "kasami_shifted_vs_high":
        return [(i, j) for i in a_set for j in gh]
    if relation == "kasami_shifted_vs_odd":
        return [(i, j) for i in a_set for j in gh]
    if relation == "even_shifted_pairs":
        return [(i, j) for i in a_set for j in gh]
    if relation == "even_high_vs_odd":
        return [(i, j) for i in range(1, 1 << h) for j in gh]
    raise UsageError(f"unknown relation {relation!r}")


def coset_intersection_expected(relation: str, m: int, i: int | None, j: int,
                                cosets: CosetTable | None = None) -> CosetVerdict:
    """Closed-form prediction for one coset relation, with the brute-force answer.

    Odd ``m`` (h = (m-1)/2, A = {1, ..., 2^(h-1) - 1}):

    * ``shifted_pairs``: i != j in A; C_{i+2^h} and C_{j+2^h} are disjoint.
    * ``shifted_vs_odd``: i, j in A, j odd; C_{i+2^h} meets C_j iff
      (i, j) = (2^s i1, i1 + 2^(h-s)), s in {2..h-2}, odd i1 < 2^(h-1-s).
    * ``kasami_leader``: j in Gamma_(h); C_{j+2^(h+1)} has leader j + 2^(h+1)
      (1 + 2^h when j = 1) and size m.
    * ``kasami_shifted_vs_high``: i in A, j in Gamma_(h); C_{i+2^h} meets
      C_{j+2^(h+1)} iff (i, j) = (1, 1).
    * ``kasami_odd_vs_high``: j in Gamma_(h); C_j and C_{j+2^(h+1)} disjoint.
    * ``kasami_shifted_vs_odd``: i in A, j in Gamma_(h); C_{i+2^h} meets C_j
      iff (i, j) = (2^s i1, i1 + 2^(h-s)), s in {1..h-2}, i1 in Gamma_(h-1-s).

    Even ``m`` (h = m/2):

    * ``even_shifted_pairs``: i in {1..2^(h-1)-1}, j in Gamma_(h);
      C_{i+2^h} meets C_{j+2^h} iff i = j and j in Gamma_(h-1).
    * ``even_high_leader``: j in Gamma_(h); C_{j+2^(h+1)} has leader
      j + 2^(h+1) except j = 1 -> 1 + 2^(h-1), j = 3 -> 1 + 2^(h-1) + 2^h; size
      m except size 2 for j = 5 at h = 3.
    * ``even_high_vs_odd``: i in {1..2^h-1}, j in Gamma_(h); C_{i+2^(h+1)}
      meets C_j iff (i, j) = (2^s i1, i1 + 2^(h+1-s)), s in {2..h-1},
      i1 in Gamma_(h-s).
    """
    if relation not in RELATIONS:
        raise UsageError(f"unknown relation {relation!r}")
    if (i, j) not in set(relation_domain(relation, m)):
        raise UsageError(f"({i}, {j}) lies outside the range of {relation} at m={m}")
    ct = cosets or build_cosets(m)
    same = ct.same_coset
    note = ""
    if m % 2:
        h = (m - 1) // 2
        if relation == "shifted_pairs":
            return CosetVerdict(relation, m, i, j, False, same(i + (1 << h), j + (1 << h)))
        if relation == "shifted_vs_odd":
            stated = range(2, h - 1)
            pred = _shift_rule(i, j, h, stated, lambda s: (1 << (h - 1 - s)) - 1)
            wide = _shift_rule(i, j, h, range(1, h - 1), lambda s: (1 << (h - 1 - s)) - 1)
            if wide != pred:
                note = "s = 1 would change the prediction"
            return CosetVerdict(relation, m, i, j, pred, same(i + (1 << h), j), note)
        if relation == "kasami_leader":
            x = j + (1 << (h + 1))
            pred = (1 + (1 << h) if j == 1 else x, m)
            return CosetVerdict(relation, m, None, j, pred, (ct.leader(x), ct.size(x)))
        if relation == "kasami_shifted_vs_high":
            pred = (i, j) == (1, 1)
            return CosetVerdict(relation, m, i, j, pred, same(i + (1 << h), j + (1 << (h + 1))))
        if relation == "kasami_odd_vs_high":
            return CosetVerdict(relation, m, None, j, False, same(j, j + (1 << (h + 1))))
        if relation == "kasami_shifted_vs_odd":
            stated = range(1, h - 1)
            pred = _shift_rule(i, j, h, stated, lambda s: (1 << (h - 1 - s)) - 1)
            narrow = _shift_rule(i, j, h, range(2, h - 1), lambda s: (1 << (h - 1 - s)) - 1)
            if narrow != pred:
                note = "prediction relies on s = 1"
            return CosetVerdict(relation, m, i, j, pred, same(i + (1 << h), j), note)
    else:
        h = m // 2
        if relation == "even_shifted_pairs":
            pred = i == j and j < (1 << (h - 1))
            return CosetVerdict(relation, m, i, j, pred, same(i + (1 << h), j + (1 << h)))
        if relation == "even_high_leader":
            x = j + (1 << (h + 1))
            if j == 1:
                lead = 1 + (1 << (h - 1))
            elif j == 3:
                lead = 1 + (1 << (h - 1)) + (1 << h)
            else:
                lead = x
            size = 2 if (j == 5 and h == 3) else m
            return CosetVerdict(relation, m, None, j, (lead, size), (ct.leader(x), ct.size(x)))
        if relation == "even_high_vs_odd":
            pred = _shift_rule(i, j, h + 1, range(2, h), lambda s: (1 << (h - s)) - 1)
            return CosetVerdict(relation, m, i, j, pred, same(i + (1 << (h + 1)), j))
    raise AssertionError("unreachable")


def check_relation(relation: str, m: int) -> list[CosetVerdict]:
    """Every verdict for ``relation`` at ``m`` (exhaustive over its range)."""
    ct = build_cosets(m)
    return [coset_intersection_expected(relation, m, i, j, ct)
            for i, j in relation_domain(relation, m)]
