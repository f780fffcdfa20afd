"""Lower and upper bounds on the minimum distance of cyclic codes.

BCH and Hartmann-Tzeng bounds are read off the defining set Z of the code.
A code and the code generated by the reciprocal of its generator have the
same weights, so both Z and -Z are searched and the larger bound is kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

import numpy as np

from ..errors import UsageError
from .cyclic import CodeRecord, Distance

HT_CAP_DELTA = 64
HT_CAP_S = 64


@dataclass(frozen=True)
class HTWitness:
    """Z contains {start + i*b1 + j*b : 0 <= i <= delta-2, 0 <= j <= s}."""
    start: int
    delta: int
    b1: int
    b: int
    s: int
    negated: bool = False  # witness lives in -Z

    @property
    def bound(self) -> int:
        return self.delta + self.s

    def elements(self, n: int) -> set[int]:
        return {(self.start + i * self.b1 + j * self.b) % n
                for i in range(self.delta - 1) for j in range(self.s + 1)}

    def as_dict(self) -> dict:
        return {"start": self.start, "delta": self.delta, "b1": self.b1, "b": self.b,
                "s": self.s, "set": "-Z" if self.negated else "Z"}


@dataclass(frozen=True)
class BoundReport:
    bch: int
    hartmann_tzeng: int
    ht_witness: HTWitness | None
    singleton_upper: int
    sphere_packing_verdict: str

    def as_dict(self) -> dict:
        return {
            "bch": self.bch,
            "ht": self.hartmann_tzeng,
            "ht_witness": None if self.ht_witness is None else self.ht_witness.as_dict(),
            "singleton": self.singleton_upper,
            "sphere_packing": self.sphere_packing_verdict,
        }


def negate(zs, n: int) -> frozenset:
    return frozenset((-z) % n for z in zs)


def _mask(zs, n: int) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    mask[list(zs)] = True
    return mask


def _unit_classes(n: int) -> list[int]:
    """One unit per class of Z_n^* under multiplication by 2 and by -1."""
    seen = set()
    reps = []
    for u in range(1, n):
        if gcd(u, n) != 1 or u in seen:
            continue
        reps.append(u)
        x = u
        while True:
            seen.add(x)
            seen.add(n - x)
            x = 2 * x % n
            if x == u:
                break
    return reps


def _runs(mask: np.ndarray, b1: int) -> np.ndarray:
    """R[a] = number of consecutive elements a, a+b1, ... lying in the set."""
    n = mask.size
    order = (np.arange(n, dtype=np.int64) * b1) % n
    along = mask[order]
    R = np.zeros(n, dtype=np.int64)
    if along.all():
        R[:] = n
        return R
    # scan backwards twice around the cycle so runs wrap correctly
    run = 0
    vals = np.zeros(n, dtype=np.int64)
    for t in range(2 * n - 1, -1, -1):
        run = run + 1 if along[t % n] else 0
        if t < n:
            vals[t] = run
    R[order] = vals
    return R


def _bch_one(zs, n: int, unit_strides: bool) -> int:
    if not zs:
        return 1
    mask = _mask(zs, n)
    strides = _unit_classes(n) if unit_strides else [1]
    best = max(int(_runs(mask, b1).max()) for b1 in strides)
    return min(best, n) + 1


def bch_bound(zs, n: int, unit_strides: bool = True) -> int:
    """1 + longest run of consecutive exponents in Z or -Z.

    With ``unit_strides`` the run may use any step coprime to n (the usual
    generalization); otherwise only step 1.
    """
    zs = frozenset(zs)
    return max(_bch_one(zs, n, unit_strides), _bch_one(negate(zs, n), n, unit_strides))


def _ht_one(zs, n: int, cap_delta: int, cap_s: int, negated: bool):
    if not zs:
        return 1, None
    mask = _mask(zs, n)
    best, wit = 1, None
    idx = np.arange(n, dtype=np.int64)
    for b1 in _unit_classes(n):
        R = np.minimum(_runs(mask, b1), cap_delta - 1)
        top = int(R.max())
        if top == 0:
            continue
        if top + 1 > best:
            a = int(R.argmax())
            best, wit = top + 1, HTWitness(a, top + 1, b1, 0, 0, negated)
        for b in range(1, n // 2 + 1):
            g = gcd(b, n)
            M = R
            for s in range(1, cap_s + 1):
                M = np.minimum(M, R[(idx + s * b) % n])
                mx = int(M.max())
                if mx + 1 + cap_s <= best or mx == 0:
                    break
                delta = M + 1
                val = np.where((M > 0) & (delta > g), delta + s, 0)
                a = int(val.argmax())
                if val[a] > best:
                    best = int(val[a])
                    wit = HTWitness(a, int(delta[a]), b1, b, s, negated)
    return best, wit


def hartmann_tzeng_bound(zs, n: int, cap_delta: int = HT_CAP_DELTA,
                         cap_s: int = HT_CAP_S) -> tuple[int, HTWitness | None]:
    """Best delta + s over witnesses within the caps, searched in Z and -Z."""
    zs = frozenset(zs)
    a = _ht_one(zs, n, cap_delta, cap_s, False)
    b = _ht_one(negate(zs, n), n, cap_delta, cap_s, True)
    return a if a[0] >= b[0] else b


def ht_witness_holds(zs, n: int, witness: HTWitness) -> bool:
    """Check a claimed witness: containment plus both gcd conditions."""
    target = negate(zs, n) if witness.negated else frozenset(zs)
    if witness.delta < 2 or witness.s < 0:
        return False
    if gcd(witness.b1, n) != 1:
        return False
    if witness.s > 0 and gcd(witness.b, n) >= witness.delta:
        return False
    return witness.elements(n) <= target


def singleton_bound(n: int, k: int) -> int:
    return n - k + 1


def hamming_volume(n: int, radius: int) -> int:
    return sum(comb(n, i) for i in range(radius + 1))


def hamming_bound_slack(n: int, k: int, d: int) -> int:
    """2^(n-k) minus the ball volume of radius floor((d-1)/2); negative = impossible."""
    return (1 << (n - k)) - hamming_volume(n, (d - 1) // 2)


def sphere_packing_check(n: int, k: int, d, best_known: int | None = None) -> str:
    """``optimal`` when the Hamming bound rules out an [n, k, d+1] code.

    ``d`` may be an int or a Distance interval.  An interval is optimal only
    if its lower end already is (then d equals it); if only the upper end
    passes the test the verdict is ``undecided``.  ``not_optimal`` is given
    only when a better code is known (``best_known``).
    """
    if isinstance(d, Distance):
        lo, hi = d.lo, d.hi
    elif isinstance(d, tuple):
        lo, hi = d
    else:
        lo = hi = int(d)
    if best_known is not None and hi < best_known:
        return "not_optimal"
    if hamming_bound_slack(n, k, lo + 1) < 0:
        return "optimal"
    return "undecided"


def even_weight_lift(code: CodeRecord, lower: int) -> int:
    """Round a lower bound up to even; valid only when (x + 1) divides g."""
    if not code.is_even_weight():
        raise UsageError("even-weight lift needs (x+1) to divide the generator")
    return lower + (lower & 1)


def bound_report(code: CodeRecord, distance: Distance | None = None,
                 cap_delta: int = HT_CAP_DELTA, cap_s: int = HT_CAP_S) -> BoundReport:
    zs, n = code.defining_set, code.n
    bch = bch_bound(zs, n)
    ht, wit = hartmann_tzeng_bound(zs, n, cap_delta, cap_s)
    d = distance if distance is not None else code.distance
    verdict = "undecided" if d is None else sphere_packing_check(n, code.k, d)
    return BoundReport(bch, max(ht, bch), wit, singleton_bound(n, code.k), verdict)
