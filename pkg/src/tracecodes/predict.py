"""Closed-form predictions of g_s, L_s and distance ranges per family.

Each family's generator is described as a multiset of exponent
representatives ``i`` (one factor ``m_{alpha^{-i}}`` each, ``0`` standing for
``x - 1``), built from the Gamma sets exactly as the closed forms list them.
The representatives are then mapped to coset leaders with the brute-force
coset table.  Because the factors come from a trace sum, a coset that is hit
an even number of times cancels, and a coset C_i with m / |C_i| even
contributes Tr(x^i) = 0 identically; both effects are applied and recorded
in ``notes``.

The span is predicted twice: from the closed-form formula and from the sizes
of the predicted cosets.  ``crosscheck`` compares both against a computed
analysis.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import families
from .cosets import CosetTable, build_cosets, gamma_set
from .errors import UnsupportedPrediction, UsageError
from .gf2m import FieldSpec
from .polyring import BinaryPoly, minimal_polynomial, product
from .sequence import SequenceAnalysis


@dataclass(frozen=True)
class Prediction:
    fam: str
    m: int
    predicted_span: int
    predicted_leader_set: frozenset
    predicted_dim: int
    predicted_distance: tuple[int, int]
    source: str
    display: tuple[int, ...] = field(repr=False, default=())
    formula_span: int = 0
    set_span: int = 0
    singleton_upper: int = 0
    extrapolated: bool = False
    notes: tuple[str, ...] = ()

    @property
    def includes_one(self) -> bool:
        """True when (x - 1) divides the predicted generator."""
        return 0 in self.predicted_leader_set

    @property
    def consistent(self) -> bool:
        """Formula span and coset-size span agree."""
        return self.formula_span == self.set_span

    def as_dict(self) -> dict:
        return {
            "family": self.fam,
            "m": self.m,
            "n": (1 << self.m) - 1,
            "span": self.predicted_span,
            "formula_span": self.formula_span,
            "set_span": self.set_span,
            "dimension": self.predicted_dim,
            "leaders": sorted(self.predicted_leader_set),
            "display": list(self.display),
            "distance": {"lo": self.predicted_distance[0], "hi": self.predicted_distance[1]},
            "singleton_upper": self.singleton_upper,
            "extrapolated": self.extrapolated,
            "source": self.source,
            "notes": list(self.notes),
        }


def _G(t):
    return gamma_set(t)


def _minus(a, b):
    bs = set(b)
    return [i for i in a if i not in bs]


def _shifted(idx, shift):
    return [i + (1 << shift) for i in idx]


# -- generator displays --------------------------------------------------------
#
# Each returns (representatives, formula span, (d_lo, d_hi), source text).

def _f1(m):
    return [0, 1], m + 1, (4, 4), "f1: (x-1) m_{alpha^-1}, parameters [2^m-1, 2^m-2-m, 4]"


def _f2(m):
    h = (m - 1) // 2
    reps = [0, 3, 1 + (1 << (h - 1)), 1 + (1 << (h - 1)) + (1 << h)]
    return reps, 3 * m + 1, (4, 8), "f2: leaders {0, 3, 1+2^(h-1), 1+2^(h-1)+2^h}, 4 <= d <= 8"


def _f3(m):
    h = (m - 1) // 2
    return [0, 1, 3, (1 << h) + 1], 3 * m + 1, (8, 8), \
        "f3: (x-1) m_{alpha^-1} m_{alpha^-3} m_{alpha^-(2^h+1)}, d = 8"


def _f4(m):
    h = (m - 1) // 2
    reps = _shifted(_G(h - 1), h)
    for j in range(2, h - 1, 2):
        reps += _shifted(_G(h - j), h + 1 - j)
        reps += _shifted(_minus(_G(h - j), _G(h - 1 - j)), h - j)
    low = (1 << (h - 2)) + 2 if h >= 2 else 2   # 2^((m-5)/2) + 2
    if m % 4 == 1:
        reps += [3, 1, 0]
        span = 1 + m * ((1 << (h - 1)) + 1)
        lo = max(8, low)
    else:
        reps += [5, 0]
        span = 1 + m * ((1 << (h - 1)) - 1)
        lo = low
    return reps, span, (lo, span), "f4: nested Gamma display with N_2(j) = 0 filter"


def _f5(m):
    h = (m - 1) // 2
    reps = _shifted(_minus(_G(h), [1]), h + 1)
    reps += _shifted(_minus(_G(h - 1), [1]), h)
    for j in range(1, h - 2, 2):
        reps += _shifted(_minus(_G(h - j), _G(h - 1 - j)), h - j)
        reps += _shifted(_G(h - 2 - j), h - 1 - j)
    if m % 4 == 1:
        reps += [3, 1, 0]
        span = 1 + m * ((1 << h) - 1)
    else:
        reps += [7, 0]
        span = 1 + m * ((1 << h) - 3)
    lo = max(2, 1 << (h - 1))          # 2^((m-3)/2)
    return reps, span, (lo, span), "f5: Kasami display with N_2(j) = 1 filter"


def _f6(m):
    h = m // 2
    reps = _shifted(_minus(_G(h), [1]), h)
    parity = 0 if m % 4 == 0 else 1
    for j in range(1, h - 1):
        if j % 2 == parity:
            reps += _shifted(_G(j), j)
    if m % 4 == 0:
        reps += [1]
        span = m * ((1 << (h + 1)) - 2) // 3
    else:
        span = m * ((1 << (h + 1)) - 4) // 3
    return reps, span, (1 << (h - 1), span + 1), "f6: (s,t) = (1,-1) display"


def _f7(m):
    h = m // 2
    reps = _shifted(_minus(_G(h), _G(h - 1)), h)
    for j in range(1, h - 1):
        reps += _shifted(_G(j), j + 1)
    span = m * ((1 << (h - 1)) - 1)
    lo = max(2, (1 << (h - 2)) + 1)    # 2^((m-4)/2) + 1
    return reps, span, (lo, span + 1), "f7: (s,t) = (2,-2) display"


def _f8(m):
    h = m // 2
    reps = _shifted(_G(h), h + 1) + _shifted(_G(h - 1), h)
    for j in range(1, h - 2, 2):
        reps += _shifted(_minus(_G(h - j), _G(h - 1 - j)), h - j)
        reps += _shifted(_G(h - 2 - j), h - 1 - j)
    low = (1 << (h - 1)) + 1
    if m % 4 == 0:
        reps += [3, 1]
        span = m * ((1 << h) + 1) - h
        lo = max(7, low)
    else:
        reps += [7]
        span = 6 * m - 1 if m == 6 else m * ((1 << h) - 1) - h
        lo = low
    return reps, span, (lo, span + 1), "f8: (s,t) = (1, 2^(m/2-1)) display"


def _f1_intro(m):
    return [1], m, (3, 3), "F1_intro: Hamming-equivalent, parameters [2^m-1, 2^m-1-m, 3]"


DISPLAYS = {
    "F1_intro": _f1_intro,
    "f1": _f1, "f2": _f2, "f3": _f3, "f4": _f4,
    "f5": _f5, "f6": _f6, "f7": _f7, "f8": _f8,
}


def _resolve(fam) -> str:
    if isinstance(fam, families.FamilyDescriptor):
        if fam.id in DISPLAYS:
            return fam.id
        for fid in ("f6", "f7"):
            if fam.params == families.CATALOG[fid].params:
                return fid
        raise UnsupportedPrediction(f"no closed form for {fam.id}")
    if fam not in DISPLAYS:
        if fam in families.CATALOG or fam == "F0":
            raise UnsupportedPrediction(f"no closed form for {fam}")
        raise UsageError(f"unknown family {fam!r}")
    return fam


def reduce_display(reps, cosets: CosetTable) -> tuple[frozenset, list[str]]:
    """Leaders surviving a trace sum over ``reps``, with notes on what dropped."""
    m = cosets.m
    counts = Counter(cosets.leader(i) for i in reps)
    notes = []
    out = set()
    for lead in sorted(counts):
        n = counts[lead]
        size = cosets.size(lead)
        if n > 1:
            notes.append(f"coset of {lead} appears {n} times in the display"
                         + ("; cancels" if n % 2 == 0 else ""))
        if n % 2 == 0:
            continue
        if (m // size) % 2 == 0:
            notes.append(f"coset of {lead} has size {size}; Tr(x^{lead}) vanishes "
                         f"since {m}/{size} is even")
            continue
        out.add(lead)
    return frozenset(out), notes


def predict(fam, m: int) -> Prediction:
    """Materialize the closed-form prediction for ``(fam, m)``."""
    fid = _resolve(fam)
    desc = families.CATALOG[fid]
    if not desc.allows(m):
        raise UnsupportedPrediction(f"{fid} has no closed form at m={m} ({desc.validity_text})")
    extrapolated = not desc.is_valid(m)
    reps, formula_span, (lo, hi), source = DISPLAYS[fid](m)
    cosets = build_cosets(m)
    leaders, notes = reduce_display(reps, cosets)
    set_span = cosets.total_size(leaders)
    v = (1 << m) - 1
    span = formula_span
    if extrapolated:
        notes.append(f"m={m} lies outside the proven range ({desc.validity_text}); "
                     f"span taken from the coset sizes, the formula gives {formula_span}")
        span = set_span
        if fid in ("f4", "f5"):
            hi = span
        elif fid in ("f6", "f7", "f8"):
            hi = span + 1
    elif formula_span != set_span:
        notes.append(f"formula span {formula_span} differs from coset-size span {set_span}")
    lo = max(lo, 2)
    return Prediction(
        fam=fid, m=m, predicted_span=span, predicted_leader_set=leaders,
        predicted_dim=v - span, predicted_distance=(lo, max(lo, hi)), source=source,
        display=tuple(reps), formula_span=formula_span, set_span=set_span,
        singleton_upper=span + 1, extrapolated=extrapolated, notes=tuple(notes),
    )


def generator_from_leaders(leaders, spec: FieldSpec, cosets: CosetTable | None = None) -> BinaryPoly:
    """prod of m_{alpha^{-i}} over ``leaders`` (``0`` gives x + 1)."""
    cosets = cosets or build_cosets(spec.m)
    return product(minimal_polynomial(-i % spec.v, spec, cosets) for i in sorted(leaders))


def display_generator(pred: Prediction, spec: FieldSpec) -> BinaryPoly:
    """Literal product over the display multiset, without any cancellation.

    Useful to explain printed polynomials that were expanded from the closed
    form rather than computed from the sequence.
    """
    cosets = build_cosets(spec.m)
    return product(minimal_polynomial(-i % spec.v, spec, cosets) for i in pred.display)


@dataclass(frozen=True)
class CrosscheckReport:
    fam: str
    m: int
    span_match: bool
    formula_match: bool
    leaders_match: bool
    generator_match: bool
    predicted_span: int
    formula_span: int
    computed_span: int
    missing: tuple[int, ...] = ()
    extra: tuple[int, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.span_match and self.formula_match and self.leaders_match \
            and self.generator_match

    def as_dict(self) -> dict:
        return {
            "family": self.fam,
            "m": self.m,
            "ok": self.ok,
            "span": {"predicted": self.predicted_span, "formula": self.formula_span,
                     "computed": self.computed_span},
            "leaders_match": self.leaders_match,
            "generator_match": self.generator_match,
            "missing_leaders": list(self.missing),
            "extra_leaders": list(self.extra),
            "notes": list(self.notes),
        }


def crosscheck(pred: Prediction, computed: SequenceAnalysis, spec: FieldSpec) -> CrosscheckReport:
    """Compare a prediction with a computed analysis; mismatches are reported."""
    if spec.m != pred.m:
        raise UsageError(f"prediction is for m={pred.m}, field has m={spec.m}")
    cosets = build_cosets(pred.m)
    if computed.index_set:
        got = cosets.leaders_of(computed.index_set)
    else:
        got = _leaders_from_poly(computed.minimal_poly, spec, cosets)
    want = set(pred.predicted_leader_set)
    gen = generator_from_leaders(want, spec, cosets)
    formula_ok = pred.formula_span == computed.linear_span or pred.extrapolated
    return CrosscheckReport(
        fam=pred.fam, m=pred.m,
        span_match=pred.predicted_span == computed.linear_span,
        formula_match=formula_ok,
        leaders_match=want == got,
        generator_match=gen == computed.minimal_poly,
        predicted_span=pred.predicted_span, formula_span=pred.formula_span,
        computed_span=computed.linear_span,
        missing=tuple(sorted(got - want)), extra=tuple(sorted(want - got)),
        notes=pred.notes,
    )


def _leaders_from_poly(poly: BinaryPoly, spec: FieldSpec, cosets: CosetTable) -> set[int]:
    """Leaders i with m_{alpha^{-i}} dividing ``poly`` (roots read off directly)."""
    out = set()
    for lead in cosets.leaders:
        if poly(spec.alpha_pow(-lead), spec) == 0:
            out.add(lead)
    return out
