"""End-to-end code reports: family -> sequence -> code -> distance and bounds."""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from importlib import resources

from .. import families, sequence
from ..errors import ConsistencyError
from ..gf2m import FieldSpec
from . import bounds, distance
from .cyclic import CodeRecord, Distance, build_code, dual

SCHEMA_VERSION = 1


def code_for(fam, m: int, spec: FieldSpec | None = None) -> CodeRecord:
    """The cyclic code generated by the minimal polynomial of the family's sequence."""
    seq = sequence.generate(fam, m, spec)
    res = sequence.analyze(seq)
    return build_code(res.minimal_poly, seq.spec)


def certify(code: CodeRecord, mode: str = "exact", budget: int = distance.DEFAULT_BUDGET,
            jobs: int = 1, isd_iterations: int = distance.DEFAULT_ISD_ITERATIONS):
    """Distance (per routing, or bounds only) together with the bound report."""
    pre = bounds.bound_report(code, Distance(1, code.n))
    lower = pre.hartmann_tzeng
    if code.is_even_weight():
        lower = bounds.even_weight_lift(code, lower)
    if mode == "bounds":
        hi = pre.singleton_upper
        if code.is_even_weight():
            hi -= hi & 1
        dist = Distance(min(lower, hi), hi, "bounds")
    elif mode == "exact":
        dist = distance.min_distance(code, budget, jobs, isd_iterations=isd_iterations,
                                     lower_hint=lower)
    else:
        raise ValueError(f"unknown distance mode {mode!r}")
    if lower > dist.hi:
        raise ConsistencyError(f"proven lower bound {lower} exceeds distance {dist}")
    if dist.lo < lower:
        dist = Distance(lower, dist.hi, dist.method)
    rep = bounds.BoundReport(pre.bch, pre.hartmann_tzeng, pre.ht_witness, pre.singleton_upper,
                             bounds.sphere_packing_check(code.n, code.k, dist))
    return dist, rep


def code_report(fid: str, m: int, code: CodeRecord, dist: Distance,
                rep: bounds.BoundReport) -> dict:
    verdict = rep.sphere_packing_verdict
    return {
        "schema": SCHEMA_VERSION,
        "family": fid,
        "m": m,
        "n": code.n,
        "k": code.k,
        "generator_hex": code.generator.hex(),
        "generator_pretty": str(code.generator),
        "defining_set_leaders": code.defining_leaders(),
        "distance": {"kind": dist.kind, "lo": dist.lo, "hi": dist.hi, "method": dist.method},
        "bounds": {"bch": rep.bch, "ht": rep.hartmann_tzeng,
                   "ht_witness": None if rep.ht_witness is None else rep.ht_witness.as_dict(),
                   "singleton": rep.singleton_upper, "sphere_packing": verdict},
        "optimal": True if verdict == "optimal" else None,
    }


# -- expected values --------------------------------------------------------

@dataclass(frozen=True)
class ExpectedRow:
    family: str
    m: int
    n: int
    k: int
    d: tuple[int, int]
    dual_k: int | None
    dual_d: tuple[int, int] | None
    optimal: str
    dual_optimal: str


def _read_data(name: str) -> str:
    return resources.files("tracecodes.data").joinpath(name).read_text(encoding="utf-8")


def load_table2() -> list[ExpectedRow]:
    lines = [ln for ln in _read_data("table2.csv").splitlines() if ln and not ln.startswith("#")]
    rows = []
    for r in csv.DictReader(lines):
        dual_k = int(r["dual_k"]) if r["dual_k"] else None
        rows.append(ExpectedRow(
            r["family"], int(r["m"]), int(r["n"]), int(r["k"]),
            (int(r["d_lo"]), int(r["d_hi"])), dual_k,
            (int(r["dual_d_lo"]), int(r["dual_d_hi"])) if dual_k is not None else None,
            r["optimal"], r["dual_optimal"]))
    return rows


def load_printed_generators() -> list[dict]:
    lines = [ln for ln in _read_data("printed_generators.csv").splitlines()
             if ln and not ln.startswith("#")]
    return [dict(r, m=int(r["m"]), degree=int(r["degree"])) for r in csv.DictReader(lines)]


def compare_distance(dist: Distance, expected: tuple[int, int]) -> str:
    """``match``: computed interval inside the expected one (equal if exact);
    ``consistent``: the two overlap; ``mismatch`` otherwise."""
    lo, hi = expected
    if lo <= dist.lo and dist.hi <= hi:
        return "match"
    if dist.lo <= hi and lo <= dist.hi:
        return "consistent"
    return "mismatch"


@dataclass(frozen=True)
class Table2Result:
    expected: ExpectedRow
    code: CodeRecord
    dist: Distance
    dual_dist: Distance | None

    @property
    def dims_ok(self) -> bool:
        e = self.expected
        return self.code.n == e.n and self.code.k == e.k and \
            (e.dual_k is None or self.code.n - self.code.k == e.dual_k)

    @property
    def d_status(self) -> str:
        return compare_distance(self.dist, self.expected.d)

    @property
    def dual_status(self) -> str:
        if self.expected.dual_d is None or self.dual_dist is None:
            return "n/a"
        return compare_distance(self.dual_dist, self.expected.dual_d)

    @property
    def ok(self) -> bool:
        return self.dims_ok and self.d_status == "match" and self.dual_status in ("match", "n/a")


def table2_row(row: ExpectedRow, budget: int = distance.DEFAULT_BUDGET, jobs: int = 1,
               with_dual: bool = True) -> Table2Result:
    fam = families.get_family(row.family)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", families.ExtrapolationWarning)
        code = code_for(fam, row.m, families.default_field(fam, row.m))
    dist, _ = certify(code, "exact", budget, jobs)
    dual_dist = None
    if with_dual and row.dual_k is not None:
        dual_dist, _ = certify(dual(code), "exact", budget, jobs)
    return Table2Result(row, code, dist, dual_dist)


def _fmt(n, k, d: Distance | tuple | None) -> str:
    if d is None:
        return ""
    if isinstance(d, Distance):
        d = (d.lo, d.hi)
    ds = str(d[0]) if d[0] == d[1] else f"{d[0]}..{d[1]}"
    return f"[{n},{k},{ds}]"


def table2_csv(results: list[Table2Result]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "m", "published_code", "computed_code", "code_status",
                "published_dual", "computed_dual", "dual_status", "published_optimal",
                "computed_sphere_packing", "ok"])
    for r in results:
        e, c = r.expected, r.code
        w.writerow([
            e.family, e.m, _fmt(e.n, e.k, e.d), _fmt(c.n, c.k, r.dist),
            r.d_status if r.dims_ok else "dimension_mismatch",
            _fmt(e.n, e.dual_k, e.dual_d) if e.dual_k is not None else "",
            _fmt(c.n, c.n - c.k, r.dual_dist) if r.dual_dist is not None else "",
            r.dual_status, e.optimal, bounds.sphere_packing_check(c.n, c.k, r.dist),
            "yes" if r.ok else "no",
        ])
    return buf.getvalue()
