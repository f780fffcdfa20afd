"""Command-line front end.

Verbs: cosets, families, sequence, predict, code, verify, table2.  Every
verb accepts the global flags (--m, --family, --poly, --alpha, --config,
--format, --jobs, --budget).  Output is deterministic; the exit status is 0
only when every check a verb performs passed.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import __version__, families, predict as predict_mod, sequence
from .codes import report
from .codes.cyclic import Distance, dual
from .codes.distance import DEFAULT_BUDGET
from .cosets import RELATIONS, build_cosets, check_relation
from .errors import TraceCodesError, UnsupportedPrediction
from .gf2m import load_config
from .polyring import BinaryPoly


def parse_m(text: str) -> list[int]:
    """``7``, ``5..9`` or ``5,7,9``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..", 1)
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty m range {text!r}")
    return sorted(set(out))


def parse_families(values) -> list[str]:
    out: list[str] = []
    for v in values or []:
        out.extend(x.strip() for x in v.split(",") if x.strip())
    return out


class Context:
    def __init__(self, args):
        self.args = args
        self.config = load_config(args.config) if args.config else None
        self.out = sys.stdout

    def field(self, fam, m):
        a = self.args
        return families.default_field(fam, m, a.poly, a.alpha, self.config)

    def emit(self, text: str = ""):
        self.out.write(text + "\n")

    def emit_json(self, obj):
        self.emit(json.dumps(obj, indent=2, sort_keys=False))

    @property
    def fmt(self) -> str:
        return self.args.format


def _single_m(ctx) -> int:
    ms = ctx.args.m
    if not ms or len(ms) != 1:
        raise TraceCodesError("this verb needs a single --m value")
    return ms[0]


def _single_family(ctx) -> str:
    fams = parse_families(ctx.args.family)
    if len(fams) != 1:
        raise TraceCodesError("this verb needs exactly one --family")
    return fams[0]


# -- verbs --------------------------------------------------------------------

def cmd_cosets(ctx) -> int:
    ok = True
    for m in ctx.args.m or [5]:
        table = build_cosets(m)
        rows = [{"leader": i, "size": table.size(i), "coset": table.coset(i)}
                for i in table.leaders]
        checks = []
        if ctx.args.relations:
            for rel in RELATIONS:
                for vd in check_relation(rel, m):
                    checks.append({"relation": rel, "i": vd.i, "j": vd.j,
                                   "predicted": vd.predicted, "actual": vd.actual,
                                   "agrees": vd.agrees, "note": vd.note})
                    ok &= vd.agrees
        if ctx.fmt == "json":
            ctx.emit_json({"m": m, "v": table.v, "cosets": rows, "relations": checks})
            continue
        ctx.emit(f"m={m} v={table.v} cosets={len(rows)}")
        for r in rows:
            ctx.emit(f"  C_{r['leader']:<5} size {r['size']:<3} {r['coset']}")
        for c in checks:
            if not c["agrees"]:
                ctx.emit(f"  DISAGREE {c['relation']} i={c['i']} j={c['j']}: "
                         f"stated {c['predicted']}, computed {c['actual']} {c['note']}")
        if ctx.args.relations:
            bad = sum(not c["agrees"] for c in checks)
            ctx.emit(f"  relations: {len(checks) - bad}/{len(checks)} agree")
    return 0 if ok else 1


def cmd_families(ctx) -> int:
    fams = parse_families(ctx.args.family) or list(families.FAMILY_IDS)
    if not ctx.args.check:
        descs = [families.get_family(f).describe() for f in fams]
        if ctx.fmt == "json":
            ctx.emit_json(descs)
        else:
            for d in descs:
                extra = f" (examples also at m={d['extrapolated_m']})" if d["extrapolated_m"] else ""
                ctx.emit(f"{d['id']:<9} {d['formula']}")
                ctx.emit(f"          valid: {d['validity']}{extra}; permutation: {d['permutation']}")
        return 0
    ms = ctx.args.m or list(range(3, 13))
    results, ok = [], True
    for fid in fams:
        fam = families.get_family(fid)
        for m in ms:
            if not fam.is_valid(m):
                continue
            claim = fam.permutation_claim(m)
            got = families.is_permutation(fam, m, ctx.field(fam, m))
            agree = claim is None or claim == got
            ok &= agree
            results.append({"family": fid, "m": m, "claimed": claim, "computed": got,
                            "agrees": agree})
    if ctx.fmt == "json":
        ctx.emit_json(results)
    else:
        for r in results:
            ctx.emit(f"{r['family']:<9} m={r['m']:<3} claimed={r['claimed']!s:<5} "
                     f"computed={r['computed']!s:<5} {'ok' if r['agrees'] else 'MISMATCH'}")
    return 0 if ok else 1


def cmd_sequence(ctx) -> int:
    fid, m = _single_family(ctx), _single_m(ctx)
    fam = families.get_family(fid)
    seq = sequence.generate(fam, m, ctx.field(fam, m))
    emit = ctx.args.emit
    if emit == "bits":
        ctx.emit(seq.to_string())
        return 0
    res = sequence.analyze(seq)
    if emit == "poly":
        if ctx.fmt == "json":
            ctx.emit_json({"family": fid, "m": m, "span": res.linear_span,
                           "minimal_poly": str(res.minimal_poly),
                           "minimal_poly_hex": res.minimal_poly.hex()})
        else:
            ctx.emit(f"L_s = {res.linear_span}")
            ctx.emit(str(res.minimal_poly))
        return 0
    # spectrum: leaders of the index set with their DFT coefficient a_i
    table = build_cosets(m)
    leaders = sorted(res.leaders(table))
    spec = seq.spec
    rows = [{"leader": i, "size": table.size(i),
             "coefficient": f"alpha^{int(spec.log[res.dft_coeffs[i]])}"} for i in leaders]
    if ctx.fmt == "json":
        ctx.emit_json({"family": fid, "m": m, "span": res.linear_span, "index_leaders": rows})
    else:
        for r in rows:
            ctx.emit(f"C_{r['leader']:<5} size {r['size']:<3} a = {r['coefficient']}")
        ctx.emit(f"L_s = {res.linear_span}")
    return 0


def cmd_predict(ctx) -> int:
    fid, m = _single_family(ctx), _single_m(ctx)
    pred = predict_mod.predict(fid, m)
    if ctx.fmt == "json" or ctx.args.json:
        ctx.emit_json(pred.as_dict())
    else:
        d = pred.as_dict()
        ctx.emit(f"{fid} m={m}: L_s = {d['span']} (formula {d['formula_span']}, "
                 f"coset sizes {d['set_span']}), k = {d['dimension']}, "
                 f"d in [{d['distance']['lo']}, {d['distance']['hi']}]")
        ctx.emit(f"  leaders: {d['leaders']}")
        for note in d["notes"]:
            ctx.emit(f"  note: {note}")
    return 0


def _certify(ctx, code):
    return report.certify(code, ctx.args.distance, ctx.args.budget, ctx.args.jobs)


def cmd_code(ctx) -> int:
    fid, m = _single_family(ctx), _single_m(ctx)
    fam = families.get_family(fid)
    code = report.code_for(fam, m, ctx.field(fam, m))
    if ctx.args.dual:
        code = dual(code)
    dist, rep = _certify(ctx, code)
    doc = report.code_report(fid, m, code, dist, rep)
    if ctx.args.dual:
        doc["dual"] = True
    if ctx.fmt == "json" or ctx.args.json:
        ctx.emit_json(doc)
    else:
        ctx.emit(f"{fid} m={m}{' dual' if ctx.args.dual else ''}: "
                 f"[{doc['n']},{doc['k']},{dist}] ({dist.method})")
        ctx.emit(f"  g(x) = {doc['generator_pretty']}")
        ctx.emit(f"  defining-set leaders: {doc['defining_set_leaders']}")
        b = doc["bounds"]
        ctx.emit(f"  BCH {b['bch']}, HT {b['ht']}, Singleton {b['singleton']}, "
                 f"sphere packing: {b['sphere_packing']}")
    return 0


def _verify_one(ctx, fid: str, m: int, printed, expected) -> dict:
    fam = families.get_family(fid)
    rec = {"family": fid, "m": m, "checks": {}, "notes": []}
    checks = rec["checks"]
    spec = ctx.field(fam, m)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", families.ExtrapolationWarning)
        seq = sequence.generate(fam, m, spec)
    rec["notes"] += [str(w.message) for w in caught]
    dft = sequence.analyze_dft(seq)
    bm = sequence.analyze_bm(seq)
    checks["bm_equals_dft"] = bm.minimal_poly == dft.minimal_poly
    checks["annihilates"] = sequence.annihilates(dft.minimal_poly, seq.bits)
    try:
        pred = predict_mod.predict(fid, m)
    except UnsupportedPrediction as exc:
        pred = None
        rec["notes"].append(f"no prediction: {exc}")
    if pred is not None:
        cc = predict_mod.crosscheck(pred, dft, spec)
        checks["span"] = cc.span_match
        checks["span_formula"] = cc.formula_match
        checks["leaders"] = cc.leaders_match
        rec["span"] = {"predicted": cc.predicted_span, "formula": cc.formula_span,
                       "computed": cc.computed_span}
        rec["notes"] += list(cc.notes)
    row = printed.get((fid, m))
    if row is not None and ctx.args.poly is None and ctx.args.alpha is None:
        checks["printed_generator"] = BinaryPoly.parse(row["generator"]) == dft.minimal_poly
    code = report.build_code(dft.minimal_poly, spec)
    dist, rep = _certify(ctx, code)
    rec["code"] = report.code_report(fid, m, code, dist, rep)
    if pred is not None:
        lo, hi = pred.predicted_distance
        checks["distance_vs_prediction"] = dist.lo <= hi and lo <= dist.hi
        if dist.hi < pred.singleton_upper:
            rec["notes"].append(f"computed upper bound {dist.hi} beats the stated "
                                f"Singleton-type bound {pred.singleton_upper}")
    exp = expected.get((fid, m))
    if exp is not None:
        checks["table_dimension"] = (code.n, code.k) == (exp.n, exp.k)
        checks["table_distance"] = report.compare_distance(dist, exp.d) != "mismatch"
        if exp.dual_k is not None and ctx.args.distance == "exact":
            ddist, _ = _certify(ctx, dual(code))
            rec["dual_distance"] = {"lo": ddist.lo, "hi": ddist.hi}
            checks["table_dual_distance"] = \
                report.compare_distance(ddist, exp.dual_d) != "mismatch"
    rec["ok"] = all(checks.values())
    return rec


def cmd_verify(ctx) -> int:
    fams = parse_families(ctx.args.family) or list(families.FAMILY_IDS)
    ms = ctx.args.m or list(range(3, 9))
    printed = {(r["family"], r["m"]): r for r in report.load_printed_generators()}
    expected = {(r.family, r.m): r for r in report.load_table2()}
    records, ok = [], True
    for fid in fams:
        fam = families.get_family(fid)
        for m in ms:
            if not fam.allows(m):
                if ctx.fmt != "json":
                    ctx.emit(f"skip {fid} m={m}: requires {fam.validity_text}")
                continue
            rec = _verify_one(ctx, fid, m, printed, expected)
            records.append(rec)
            ok &= rec["ok"]
            if ctx.fmt != "json":
                c = rec["code"]
                d = c["distance"]
                ds = str(d["lo"]) if d["lo"] == d["hi"] else f"{d['lo']}..{d['hi']}"
                bad = [k for k, v in rec["checks"].items() if not v]
                ctx.emit(f"{'PASS' if rec['ok'] else 'FAIL'} {fid} m={m} "
                         f"[{c['n']},{c['k']},{ds}] {c['bounds']['sphere_packing']}"
                         + (f"  failed: {', '.join(bad)}" if bad else ""))
                for note in rec["notes"]:
                    ctx.emit(f"    note: {note}")
    if ctx.fmt == "json":
        ctx.emit_json({"ok": ok, "runs": records})
    return 0 if ok else 1


def cmd_table2(ctx) -> int:
    rows = report.load_table2()
    ms = set(ctx.args.m) if ctx.args.m else None
    fams = set(parse_families(ctx.args.family)) or None
    results = []
    for row in rows:
        if row.m > 8 or (ms and row.m not in ms) or (fams and row.family not in fams):
            continue
        results.append(report.table2_row(row, ctx.args.budget, ctx.args.jobs))
    if ctx.fmt == "json":
        ctx.emit_json([{
            "family": r.expected.family, "m": r.expected.m,
            "computed": {"n": r.code.n, "k": r.code.k, "d": [r.dist.lo, r.dist.hi],
                         "dual_d": None if r.dual_dist is None
                         else [r.dual_dist.lo, r.dual_dist.hi]},
            "expected": {"n": r.expected.n, "k": r.expected.k, "d": list(r.expected.d),
                         "dual_k": r.expected.dual_k,
                         "dual_d": None if r.expected.dual_d is None else list(r.expected.dual_d)},
            "status": r.d_status, "dual_status": r.dual_status, "ok": r.ok,
        } for r in results])
    else:
        ctx.out.write(report.table2_csv(results))
    return 0 if all(r.ok for r in results) else 1


VERBS = {
    "cosets": cmd_cosets,
    "families": cmd_families,
    "sequence": cmd_sequence,
    "predict": cmd_predict,
    "code": cmd_code,
    "verify": cmd_verify,
    "table2": cmd_table2,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=parse_m, help="m value, range a..b, or list a,b,c")
    common.add_argument("--family", action="append",
                        help="family id (repeatable or comma separated)")
    common.add_argument("--poly", help="reduction polynomial, e.g. x^7+x^3+1")
    common.add_argument("--alpha", help="primitive element as a polynomial in x")
    common.add_argument("--config", help="file of 'm=.. poly=.. [alpha=..]' lines")
    common.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="message-enumeration limit for the window search")
    common.add_argument("--distance", choices=("exact", "bounds"), default="exact")

    p = argparse.ArgumentParser(prog="tracecodes", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True)
    c = sub.add_parser("cosets", parents=[common], help="cyclotomic cosets modulo 2^m-1")
    c.add_argument("--relations", action="store_true",
                   help="also run the coset-relation harness")
    f = sub.add_parser("families", parents=[common], help="family catalog")
    f.add_argument("--list", action="store_true", help="list the catalog (default)")
    f.add_argument("--check", action="store_true", help="check permutation claims")
    s = sub.add_parser("sequence", parents=[common], help="trace sequence and its minimal polynomial")
    s.add_argument("--emit", choices=("bits", "poly", "spectrum"), default="poly")
    pr = sub.add_parser("predict", parents=[common], help="closed-form prediction")
    pr.add_argument("--json", action="store_true")
    co = sub.add_parser("code", parents=[common], help="code parameters, distance and bounds")
    co.add_argument("--json", action="store_true")
    co.add_argument("--dual", action="store_true", help="report the dual code")
    sub.add_parser("verify", parents=[common], help="prediction vs computation, all checks")
    sub.add_parser("table2", parents=[common], help="recompute the optimality table")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    ctx = Context(args)
    try:
        return VERBS[args.verb](ctx)
    except TraceCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
