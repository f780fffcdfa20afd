"""Minimum distance of binary cyclic codes.

Three exact routes and one certified-interval route:

* ``min_distance_enum`` / ``weight_enumerator`` walk all 2^k codewords using
  packed uint64 lanes: a table of all combinations of the first rows, XORed
  with a Gray-code walk over the remaining rows.
* ``macwilliams`` turns the weight distribution of the dual into the
  distribution of the code with exact integer Krawtchouk sums.
* ``min_distance_bz`` enumerates low-weight messages on a systematic
  information window.  For a cyclic code every window of k consecutive
  positions is an information set, and averaging over the n rotations of a
  weight-d codeword shows some rotation has at most floor(d k / n) ones in
  the window.  After all messages of weight <= w have been tried, either the
  best weight found is the distance, or d >= ceil((w + 1) n / k).  A seeded
  Lee-Brickell search over random information sets can tighten the upper
  end when the window search runs out of budget.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import comb

import numpy as np

from ..errors import UsageError
from .cyclic import CodeRecord, Distance, dual, generator_rows, systematic_rows

ENUM_THRESHOLD = 26
DEFAULT_BUDGET = 40_000_000
DEFAULT_ISD_ITERATIONS = 2000
_LOW_BITS = 20


# -- packing --------------------------------------------------------------

def _lanes(nbits: int) -> int:
    return max(1, (nbits + 63) // 64)


def pack(words, nbits: int) -> np.ndarray:
    """Python ints -> array of shape (len(words), lanes) of uint64."""
    L = _lanes(nbits)
    out = np.zeros((len(words), L), dtype=np.uint64)
    mask = (1 << 64) - 1
    for r, w in enumerate(words):
        for j in range(L):
            out[r, j] = (w >> (64 * j)) & mask
    return out


def _weights(block: np.ndarray) -> np.ndarray:
    return np.bitwise_count(block).sum(axis=-1, dtype=np.int64)


def _span_table(rows: np.ndarray) -> np.ndarray:
    """All 2^r XOR combinations of ``rows``; entry b uses the rows set in b."""
    r, L = rows.shape
    table = np.zeros((1 << r, L), dtype=np.uint64)
    for i in range(r):
        table[1 << i: 2 << i] = table[: 1 << i] ^ rows[i]
    return table


# -- full enumeration -----------------------------------------------------

def _enum_chunk(args):
    rows, n, start, stop, want_hist = args
    k = rows.shape[0]
    a = min(k, _LOW_BITS)
    low = _span_table(rows[:a])
    high = rows[a:]
    hist = np.zeros(n + 1, dtype=np.int64)
    best = n + 1
    # Gray-code walk over high combinations start..stop-1
    g = start ^ (start >> 1)
    off = np.zeros(rows.shape[1], dtype=np.uint64)
    for b in range(high.shape[0]):
        if g >> b & 1:
            off ^= high[b]
    for idx in range(start, stop):
        if idx != start:
            off ^= high[(idx & -idx).bit_length() - 1]
        w = _weights(low ^ off)
        if want_hist:
            hist += np.bincount(w, minlength=n + 1)
        if idx == 0:
            w = w[1:]
        if w.size:
            best = min(best, int(w.min()))
    return hist, best


def _enumerate(words, n: int, want_hist: bool, jobs: int = 1):
    k = len(words)
    rows = pack(words, n)
    n_high = 1 << max(0, k - _LOW_BITS)
    jobs = max(1, min(jobs, n_high))
    bounds = [n_high * j // jobs for j in range(jobs + 1)]
    tasks = [(rows, n, bounds[j], bounds[j + 1], want_hist) for j in range(jobs)]
    if jobs == 1:
        results = [_enum_chunk(tasks[0])]
    else:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_enum_chunk, tasks))
    hist = sum(r[0] for r in results)
    best = min(r[1] for r in results)
    return hist, best


def _check_k(code: CodeRecord, threshold_k: int):
    if code.k > threshold_k:
        raise UsageError(
            f"k={code.k} exceeds the enumeration threshold {threshold_k}; use the dual "
            "with macwilliams() or min_distance_bz()")


def min_distance_enum(code: CodeRecord, threshold_k: int = ENUM_THRESHOLD,
                      jobs: int = 1) -> int:
    """Minimum weight over all nonzero codewords (k <= threshold_k)."""
    _check_k(code, threshold_k)
    if code.k == 0:
        raise UsageError("the zero code has no minimum distance")
    _, best = _enumerate(generator_rows(code), code.n, False, jobs)
    return best


def weight_enumerator(code: CodeRecord, threshold_k: int = ENUM_THRESHOLD,
                      jobs: int = 1) -> list[int]:
    """A_0..A_n by full enumeration."""
    _check_k(code, threshold_k)
    if code.k == 0:
        return [1] + [0] * code.n
    hist, _ = _enumerate(generator_rows(code), code.n, True, jobs)
    return [int(x) for x in hist]


# -- MacWilliams ----------------------------------------------------------

def krawtchouk_table(n: int) -> list[list[int]]:
    """K[j][i] = sum_s (-1)^s C(i, s) C(n - i, j - s), exact ints."""
    K = [[1] * (n + 1), [n - 2 * i for i in range(n + 1)]]
    for j in range(1, n):
        prev, cur = K[j - 1], K[j]
        K.append([((n - 2 * i) * cur[i] - (n - j + 1) * prev[i]) // (j + 1)
                  for i in range(n + 1)])
    return K[: n + 1]


def macwilliams(dual_enum, n: int, k_dual: int) -> list[int]:
    """Weight distribution of the dual of a code with distribution ``dual_enum``.

    The input code has length n and dimension k_dual; the result sums to
    2^(n - k_dual).  A fractional or negative coefficient means the input is
    not the distribution of a linear code.
    """
    A = [int(a) for a in dual_enum]
    if len(A) != n + 1:
        raise UsageError(f"need {n + 1} coefficients, got {len(A)}")
    if sum(A) != 1 << k_dual:
        raise UsageError(f"coefficients sum to {sum(A)}, not 2^{k_dual}")
    K = krawtchouk_table(n)
    size = 1 << k_dual
    out = []
    for j in range(n + 1):
        num = sum(a * K[j][i] for i, a in enumerate(A) if a)
        q, r = divmod(num, size)
        if r or q < 0:
            raise UsageError(f"inconsistent input: coefficient {j} is {num}/{size}")
        out.append(q)
    return out


def min_distance_macwilliams(code: CodeRecord, threshold_k: int = ENUM_THRESHOLD,
                             jobs: int = 1) -> int:
    """Distance via enumeration of the dual and the MacWilliams transform."""
    d = dual(code)
    B = macwilliams(weight_enumerator(d, threshold_k, jobs), code.n, d.k)
    return next(i for i in range(1, code.n + 1) if B[i])


# -- information-window search (Brouwer-Zimmermann style) ------------------

def window_lower_bound(n: int, k: int, w: int) -> int:
    """Distance certified once every message of weight <= w found nothing lighter."""
    return -(-(w + 1) * n // k)


def _window_search(code: CodeRecord, budget: int, best: int, even: bool):
    """Enumerate messages by weight; returns (lo, best, levels done, work)."""
    n, k, r = code.n, code.k, code.redundancy
    parity = pack([row & ((1 << r) - 1) for row in systematic_rows(code)], max(r, 1))
    lo = 1
    work = 0
    level = np.zeros((1, parity.shape[1]), dtype=np.uint64)  # weight-0 prefix sums
    last = np.array([-1], dtype=np.int64)
    w_done = 0
    for w in range(1, k + 1):
        cost = comb(k, w)
        if work + cost > budget:
            break
        parts, lasts = [], []
        keep = w < k and window_lower_bound(n, k, w) < best
        for j in range(k):
            sel = last < j
            cnt = int(np.count_nonzero(sel))
            if not cnt:
                continue
            # prefixes are sorted by last index, so sel is a prefix
            words = level[:cnt] ^ parity[j]
            wt = _weights(words) + w
            best = min(best, int(wt.min()))
            if keep:
                parts.append(words)
                lasts.append(np.full(cnt, j, dtype=np.int64))
        work += cost
        w_done = w
        lo = _lift(min(best, window_lower_bound(n, k, w)), even)
        if lo >= best or not keep:
            break
        level = np.concatenate(parts)
        last = np.concatenate(lasts)
    return min(lo, best), best, w_done, work


def _lift(d: int, even: bool) -> int:
    return d + (d & 1) if even else d


def _rref_random(gen: np.ndarray, rng) -> np.ndarray | None:
    """Row-reduce a k x n 0/1 matrix on a random information set."""
    M = gen.copy()
    k, n = M.shape
    row = 0
    for c in rng.permutation(n):
        if row == k:
            break
        piv = np.flatnonzero(M[row:, c])
        if not piv.size:
            continue
        p = row + piv[0]
        if p != row:
            M[[row, p]] = M[[p, row]]
        hit = np.flatnonzero(M[:, c])
        hit = hit[hit != row]
        M[hit] ^= M[row]
        row += 1
    return M if row == k else None


def isd_upper_bound(code: CodeRecord, iterations: int, seed: int = 0,
                    best: int | None = None, floor: int = 1) -> int:
    """Lightest codeword seen over random information sets (weights <= 2).

    Stops early once a word of weight <= ``floor`` (a proven lower bound) is
    seen.  Deterministic for a fixed seed.
    """
    n, k = code.n, code.k
    best = n if best is None else best
    if k == 0:
        return best
    gen = np.array([[row >> j & 1 for j in range(n)] for row in systematic_rows(code)],
                   dtype=np.uint8)
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(k, 1)
    for _ in range(iterations):
        if best <= floor:
            break
        M = _rref_random(gen, rng)
        if M is None:
            continue
        rows = np.packbits(M, axis=1)
        w1 = np.bitwise_count(rows).sum(axis=1, dtype=np.int64)
        best = min(best, int(w1.min()))
        if k > 1:
            for s in range(0, iu.size, 1 << 16):
                blk = rows[iu[s:s + (1 << 16)]] ^ rows[ju[s:s + (1 << 16)]]
                best = min(best, int(np.bitwise_count(blk).sum(axis=1, dtype=np.int64).min()))
    return best


def min_distance_bz(code: CodeRecord, budget: int = DEFAULT_BUDGET,
                    isd_iterations: int = DEFAULT_ISD_ITERATIONS, seed: int = 0,
                    lower_hint: int = 1) -> Distance:
    """Certified distance interval; exact when the bounds meet.

    ``budget`` caps the number of enumerated messages.  ``lower_hint`` is an
    independently proven lower bound (e.g. BCH/HT) that may be folded in.
    """
    n, k = code.n, code.k
    if k == 0:
        raise UsageError("the zero code has no minimum distance")
    even = code.is_even_weight()
    singleton = n - k + 1
    if even:
        singleton -= singleton & 1
    lo, found, _, _ = _window_search(code, budget, n + 1, even)
    hi = min(found, singleton)
    lo = max(lo, _lift(lower_hint, even))
    if isd_iterations and lo < hi:
        hi = min(hi, isd_upper_bound(code, isd_iterations, seed, hi, lo))
    if lo > hi:
        raise AssertionError(f"certified lower bound {lo} exceeds a found weight {hi}")
    return Distance(lo, hi, "window")


# -- routing --------------------------------------------------------------

def route(code: CodeRecord, threshold_k: int = ENUM_THRESHOLD) -> str:
    if code.k <= threshold_k:
        return "enum"
    if code.n - code.k <= threshold_k:
        return "macwilliams"
    return "window"


def min_distance(code: CodeRecord, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                 threshold_k: int = ENUM_THRESHOLD,
                 isd_iterations: int = DEFAULT_ISD_ITERATIONS,
                 lower_hint: int = 1) -> Distance:
    """Cheapest exact method for the code, else a certified interval."""
    how = route(code, threshold_k)
    if how == "enum":
        d = min_distance_enum(code, threshold_k, jobs)
        return Distance(d, d, "enum")
    if how == "macwilliams":
        d = min_distance_macwilliams(code, threshold_k, jobs)
        return Distance(d, d, "macwilliams")
    return min_distance_bz(code, budget, isd_iterations, lower_hint=lower_hint)


def singleton_upper(n: int, k: int) -> int:
    return n - k + 1

