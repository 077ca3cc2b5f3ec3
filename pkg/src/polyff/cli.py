"""Command-line driver: specialization runs, grid experiments, raw-parameter
analysis, whole-ring scans, relation self-tests, and catalog dumps.

Exit codes: 0 success; 2 bad arguments; 3 bad prime / extension disabled;
4 closure cap exceeded; 5 internal invariant violation (including relation
failures).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import catalog
from .errors import (
    BadPrime,
    CapExceeded,
    ExtensionDisabled,
    InvariantViolation,
    PolyffError,
    UnsupportedRing,
)
from .groupgen import CAYLEY_RETENTION_BOUND, CLOSURE_CAP_DEFAULT, GeneratedGroup, generate
from .regmap import ROTATION_LABELS, RegularMapReport, analyze, dart_model, maps_equivalent
from .rings import Ring, ZMod, ring_make
from .universal import GeneratorSet, PolyhedronParams, survey_relations

SCHEMA_VERSION = 1
SCAN_CARDINALITY_DEFAULT = 64

SCAN_COLUMNS = ("x", "y", "group_order", "p", "q", "genus",
                "degenerate", "fingerprint", "recognized")


def run_pipeline(params: PolyhedronParams, cap: int = CLOSURE_CAP_DEFAULT,
                 cayley_bound: int = CAYLEY_RETENTION_BOUND,
                 ) -> tuple[GeneratedGroup, RegularMapReport]:
    """Generators -> closure -> map report, for one parameter pair."""
    gens = GeneratorSet.from_params(params)
    group = generate([gens.rho_v, gens.rho_e, gens.rho_f], cap=cap,
                     labels=ROTATION_LABELS, cayley_bound=cayley_bound)
    return group, analyze(group)


def report_dict(ring: Ring, params: PolyhedronParams, report: RegularMapReport,
                bad_computed=None, bad_published=None) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "ring": ring.spec_string(),
        "x": str(params.x),
        "y": str(params.y),
        "group_order": report.group_order,
        "p": report.p,
        "q": report.q,
        "e_order": report.e_order,
        "V": report.V,
        "E": report.E,
        "F": report.F,
        "genus": report.genus,
        "euler": report.euler,
        "degenerate": report.degenerate,
        "degeneracy_reason": report.degeneracy_reason,
        "fingerprint": report.fingerprint.serialize(),
        "recognized": report.recognized,
        "bad_primes_computed": sorted(bad_computed) if bad_computed is not None else None,
        "bad_primes_paper": sorted(bad_published) if bad_published is not None else None,
    }


def _require_positive(**named: int) -> None:
    for name, value in named.items():
        if value < 1:
            raise PolyffError(f"--{name} must be >= 1, got {value}")


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_report(args, d: dict) -> str:
    if args.format == "json":
        return json.dumps(d, indent=2) + "\n"
    if args.format == "text":
        return "".join(f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}\n"
                       for k, v in d.items())
    # csv: single row with the scan columns
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    writer.writerow(_csv_values(d))
    return out.getvalue()


def _csv_values(d: dict) -> list[str]:
    vals = []
    for col in SCAN_COLUMNS:
        v = d.get(col)
        if v is None:
            vals.append("")
        elif isinstance(v, bool):
            vals.append("true" if v else "false")
        else:
            vals.append(str(v))
    return vals


def _attach_darts(d: dict, args, group: GeneratedGroup) -> None:
    if getattr(args, "darts", False) and group.cayley is not None:
        d["darts"] = dart_model(group).to_text()


# ---------------------------------------------------------------------------
# commands

def cmd_specialize(args) -> int:
    _require_positive(cap=args.cap)
    ring = ring_make(args.ring)
    entry = catalog.platonic_params(args.solid)
    primes = catalog.bad_primes(entry)
    params, used = catalog.specialize(entry, ring, auto_extend=args.auto_extend)
    group, report = run_pipeline(params, cap=args.cap)
    d = report_dict(used, params, report, primes.computed, primes.published)
    d["bad_primes_discrepancy"] = primes.discrepancy
    d["needs_extension"] = sorted(primes.needs_extension)
    _attach_darts(d, args, group)
    _emit(args, _render_report(args, d))
    return 0


def cmd_analyze(args) -> int:
    _require_positive(cap=args.cap)
    ring = ring_make(args.ring)
    params = PolyhedronParams(ring.parse_elem(args.x), ring.parse_elem(args.y))
    group, report = run_pipeline(params, cap=args.cap)
    d = report_dict(ring, params, report)
    _attach_darts(d, args, group)
    _emit(args, _render_report(args, d))
    return 0


def cmd_grid(args) -> int:
    _require_positive(cap=args.cap)
    ring = ZMod(args.n)
    name = "square_tiling" if args.family == "square" else "triangular_tiling"
    params, used = catalog.specialize(name, ring)
    group, report = run_pipeline(params, cap=args.cap)
    d = report_dict(used, params, report)

    prediction: dict = {"family": args.family, "n": args.n}
    if args.family == "square":
        k = args.n // 2 if args.n % 2 == 0 else args.n
        prediction["grid"] = f"{k}x{k}"
        prediction["predicted_group_order"] = 4 * k * k
        if report.degenerate:
            prediction["match"] = None  # degeneracy reported instead of a verdict
        else:
            prediction["match"] = (report.group_order == 4 * k * k
                                   and (report.p, report.q) == (4, 4))
    else:
        prediction["expected_pq"] = [6, 3]
        prediction["expected_ratio"] = "V:E:F = 1:3:2"
        if report.degenerate:
            prediction["match"] = None
        else:
            prediction["match"] = ((report.p, report.q) == (6, 3)
                                   and report.E == 3 * report.V
                                   and report.F == 2 * report.V)
    d["prediction"] = prediction
    _attach_darts(d, args, group)
    _emit(args, _render_report(args, d))
    return 0


def _scan_row(ring: Ring, x, y, cap: int, want_model: bool):
    """One scan cell: returns (row dict, dart model or None)."""
    params = PolyhedronParams(x, y)
    try:
        group, report = run_pipeline(params, cap=cap)
    except CapExceeded as exc:
        row = {"x": str(x), "y": str(y), "group_order": exc.partial_count,
               "p": None, "q": None, "genus": None, "degenerate": True,
               "fingerprint": "", "recognized": "cap_exceeded",
               "cap_exceeded": True}
        return row, None
    if not report.degenerate and report.euler != 2 - 2 * report.genus:
        raise InvariantViolation(
            f"euler/genus mismatch at (x, y) = ({x}, {y})")
    row = {"x": str(x), "y": str(y), "group_order": report.group_order,
           "p": report.p, "q": report.q, "genus": report.genus,
           "degenerate": report.degenerate,
           "fingerprint": report.fingerprint.serialize(),
           "recognized": report.recognized, "cap_exceeded": False}
    model = None
    if want_model and group.cayley is not None:
        model = dart_model(group)
    return row, model


def _scan_classes(rows, models, exact: bool):
    """Deduplicate rows into map classes, keyed by fingerprint (+ conjugacy)."""
    classes: dict[str, dict] = {}
    reps: dict[str, list] = {}
    for row, model in zip(rows, models):
        if row["cap_exceeded"]:
            continue
        fp = row["fingerprint"]
        key = fp
        if exact and model is not None:
            bucket = reps.setdefault(fp, [])
            match = None
            for i, (rep_model, _) in enumerate(bucket):
                if maps_equivalent(model, rep_model):
                    match = i
                    break
            if match is None:
                bucket.append((model, len(bucket)))
                match = len(bucket) - 1
            key = f"{fp}#{match}"
        if key not in classes:
            classes[key] = {"fingerprint": fp, "count": 0,
                            "recognized": row["recognized"],
                            "first_x": row["x"], "first_y": row["y"],
                            "p": row["p"], "q": row["q"], "genus": row["genus"]}
            if exact:
                classes[key]["class"] = key
        classes[key]["count"] += 1
    return [classes[k] for k in sorted(classes)]


def cmd_scan(args) -> int:
    _require_positive(cap=args.cap, width=args.width)
    ring = ring_make(args.ring)
    if ring.cardinality > args.max_cardinality:
        raise UnsupportedRing(
            f"scan over cardinality {ring.cardinality} refused "
            f"(limit {args.max_cardinality}; raise with --max-cardinality)")
    elements = list(ring.elements())
    pairs = [(x, y) for x in elements for y in elements]
    want_model = args.exact_dedupe

    def work(pair):
        return _scan_row(ring, pair[0], pair[1], args.cap, want_model)

    with ThreadPoolExecutor(max_workers=args.width) as pool:
        results = list(pool.map(work, pairs))
    rows = [r for r, _ in results]
    models = [m for _, m in results]
    class_list = _scan_classes(rows, models, args.exact_dedupe)
    cap_rows = sum(1 for r in rows if r["cap_exceeded"])

    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SCAN_COLUMNS)
        for row in rows:
            writer.writerow(_csv_values(row))
        _emit(args, out.getvalue())
        for cls in class_list:
            print(f"# class {cls.get('class', cls['fingerprint'])}: "
                  f"count={cls['count']} recognized={cls['recognized']}", file=sys.stderr)
    elif args.format == "json":
        payload = {"schema": SCHEMA_VERSION, "ring": ring.spec_string(),
                   "rows": rows, "classes": class_list}
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = []
        for row in rows:
            lines.append(" ".join(f"{c}={v}" for c, v in zip(SCAN_COLUMNS, _csv_values(row))))
        lines.append(f"classes: {len(class_list)}")
        for cls in class_list:
            lines.append(f"  {cls.get('class', cls['fingerprint'])} count={cls['count']} "
                         f"recognized={cls['recognized']}")
        _emit(args, "\n".join(lines) + "\n")
    return 4 if cap_rows else 0


def cmd_relations(args) -> int:
    _require_positive(trials=args.trials)
    ring = ring_make(args.ring)
    survey = survey_relations(ring, args.trials)
    payload = {
        "schema": SCHEMA_VERSION,
        "ring": survey.ring_spec,
        "pairs_tested": survey.pairs_tested,
        "exhaustive": survey.exhaustive,
        "failures": [{"x": x, "y": y, "relation": rel} for x, y, rel in survey.failures],
        "all_passed": survey.all_passed,
    }
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0 if survey.all_passed else 5


def cmd_catalog(args) -> int:
    lines = []
    for name, entry in catalog.CATALOG.items():
        primes = catalog.bad_primes(entry)
        lines.append(json.dumps({
            "name": name,
            "x": entry.x.to_json(),
            "y": entry.y.to_json(),
            "expected_pq": list(entry.expected_pq),
            "expected_group": entry.expected_group,
            "tiling_class": catalog.classify_pq(*entry.expected_pq).value,
            "bad_primes_computed": sorted(primes.computed),
            "bad_primes_paper": sorted(primes.published) if primes.published is not None else None,
            "bad_primes_discrepancy": primes.discrepancy,
            "needs_extension": sorted(primes.needs_extension),
        }))
    _emit(args, "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# argument parsing

def _add_common(sub, ring=True, cap=True, fmt="json", darts=False):
    if ring:
        sub.add_argument("--ring", required=True, help="ring spec, e.g. zmod:12 or gf:7^2")
    if cap:
        sub.add_argument("--cap", type=int, default=CLOSURE_CAP_DEFAULT,
                         help="closure element cap")
    sub.add_argument("--format", choices=("json", "csv", "text"), default=fmt)
    sub.add_argument("--out", help="write output to this path instead of stdout")
    if darts:
        sub.add_argument("--darts", action="store_true",
                         help="include dart permutations in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyff",
        description="Regular polyhedra and regular maps over finite rings.")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("specialize", help="run a catalog solid over a ring")
    sp.add_argument("--solid", required=True, choices=sorted(catalog.CATALOG))
    sp.add_argument("--auto-extend", action="store_true",
                    help="retry over GF(p^2) when sqrt5 is missing")
    _add_common(sp, darts=True)
    sp.set_defaults(func=cmd_specialize)

    an = subs.add_parser("analyze", help="run raw (x, y) parameters over a ring")
    an.add_argument("--x", required=True, help="element literal for x")
    an.add_argument("--y", required=True, help="element literal for y")
    _add_common(an, darts=True)
    an.set_defaults(func=cmd_analyze)

    gr = subs.add_parser("grid", help="square/triangular tiling over Z/nZ with prediction")
    gr.add_argument("--family", required=True, choices=("square", "triangular"))
    gr.add_argument("--n", required=True, type=int, help="modulus n >= 2")
    _add_common(gr, ring=False, darts=True)
    gr.set_defaults(func=cmd_grid)

    sc = subs.add_parser("scan", help="run every (x, y) pair of a small ring")
    sc.add_argument("--width", type=int, default=1, help="worker pool width")
    sc.add_argument("--exact-dedupe", action="store_true",
                    help="split map classes by dart-model conjugacy, not just fingerprint")
    sc.add_argument("--max-cardinality", type=int, default=SCAN_CARDINALITY_DEFAULT)
    _add_common(sc, fmt="csv")
    sc.set_defaults(func=cmd_scan)

    re_ = subs.add_parser("relations", help="assert the defining relations over a ring")
    re_.add_argument("--trials", type=int, default=50,
                     help="sample size (exhaustive when the ring is small enough)")
    _add_common(re_, cap=False)
    re_.set_defaults(func=cmd_relations)

    ca = subs.add_parser("catalog", help="dump the built-in parameter catalog")
    ca.add_argument("--list", action="store_true", default=True,
                    help="one JSON object per entry (default)")
    ca.add_argument("--out", help="write output to this path instead of stdout")
    ca.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BadPrime, ExtensionDisabled) as exc:
        print(f"polyff: {exc}", file=sys.stderr)
        return 3
    except CapExceeded as exc:
        print(f"polyff: {exc}", file=sys.stderr)
        return 4
    except InvariantViolation as exc:
        print(f"polyff: internal invariant violation: {exc}", file=sys.stderr)
        return 5
    except PolyffError as exc:
        print(f"polyff: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
