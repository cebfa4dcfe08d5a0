"""Command line front end: reproducible seeded runs with file reports.

Every randomized command requires --seed.  Reports are JSON records with a
schema field; --report-dir additionally renders delimited output and PNG
figures next to the JSON.  Exit codes: 0 success/PASS, 2 certified FAIL or
exhausted search, 1 usage or input errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bounds import (
    comprehensive_table_rows,
    degeneracy_table_rows,
    full_table_rows,
    parse_fraction,
)
from .certify import (
    certificate_digest,
    check_2dipath_coloring,
    check_comprehensive,
    check_full,
    check_homomorphism,
    check_oriented_coloring,
    check_proper,
    coloring_from_json,
    coloring_json,
)
from .errors import (
    NotFound,
    OrikitError,
    PhiNotTwoDipath,
    Stuck,
    TargetUnavailable,
)
from .exact import (
    chi2_exact,
    chio_exact,
    chromatic_number,
    min_comprehensive_order,
)
from .fixtures import fixture_suite, verify_fixture
from .graphs import parse_digraph, serialize_digraph, underlying
from .greedy import color_via_2dipath, color_via_maxdeg
from .plotting import render_graph_figure, save_table_png
from .targets import (
    FullKPartite,
    Tournament,
    cache_dir,
    find_comprehensive,
    find_full,
    store_target,
)


def _load_graph(path: str):
    return parse_digraph(Path(path).read_text())


def _emit_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _write_csv(path, headers, rows) -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(headers)
        w.writerows(rows)


def _finish(args, record, *, graph=None, coloring=None) -> None:
    """Apply the common --json / --report-dir output options."""
    if getattr(args, "json", None):
        _emit_json(record, args.json)
    if getattr(args, "report_dir", None):
        d = Path(args.report_dir)
        d.mkdir(parents=True, exist_ok=True)
        _emit_json(record, d / "report.json")
        if coloring is not None:
            _write_csv(d / "coloring.csv", ("vertex", "color"),
                       list(enumerate(coloring.values, 0)))
        if graph is not None:
            render_graph_figure(graph, d / "graph.png", coloring)


# ----------------------------------------------------------------- exact

def _cmd_exact(args) -> int:
    needs_graph = args.what in ("chromatic", "chi2", "chio")
    if needs_graph and not args.graph:
        raise ValueError(f"--what {args.what} needs a graph file")
    t0 = time.perf_counter()
    graph = None
    if args.what == "chromatic":
        graph = _load_graph(args.graph)
        value = chromatic_number(underlying(graph))
    elif args.what == "chi2":
        graph = _load_graph(args.graph)
        value = chi2_exact(graph)
    elif args.what == "chio":
        graph = _load_graph(args.graph)
        value = chio_exact(graph)
    else:
        if args.k is None or args.t is None or args.n_max is None:
            raise ValueError("--what min-order needs --k, --t and --n-max")
        value = min_comprehensive_order(args.k, args.t, args.n_max)
    runtime_ms = round((time.perf_counter() - t0) * 1000, 3)
    print("absent" if value is None else value)
    record = {"schema": 1, "parameter": args.what, "value": value,
              "runtime_ms": runtime_ms}
    _finish(args, record, graph=graph)
    return 0


# ------------------------------------------------------------- pipelines

def _coloring_record(coloring, info, case, seed) -> dict:
    return {
        "schema": 1,
        "case": case,
        "colors_used": info["colors_used"],
        "budget": info["budget"],
        "target_digest": info["target_digest"],
        "seed": seed,
        "coloring": list(coloring.values),
    }


def _cmd_color_maxdeg(args) -> int:
    graph = _load_graph(args.graph)
    eps = parse_fraction(args.eps)
    case3 = None
    if (args.case3_k is None) != (args.case3_t is None):
        raise ValueError("--case3-k and --case3-t must be given together")
    if args.case3_k is not None:
        case3 = (args.case3_k, args.case3_t)
    info: dict = {}
    coloring, case = color_via_maxdeg(
        graph, eps, args.seed, max_trials=args.budget_trials,
        directory=args.cache_dir, jobs=args.jobs, case3_params=case3,
        info=info)
    cert = check_oriented_coloring(graph, coloring)
    record = _coloring_record(coloring, info, case, args.seed)
    record["eps"] = str(eps)
    record["certificate"] = cert.to_json_obj()
    print(f"PASS {case}: {info['colors_used']} colors within "
          f"budget {info['budget']}")
    _finish(args, record, graph=graph, coloring=coloring)
    return 0


def _cmd_color_2dipath(args) -> int:
    graph = _load_graph(args.graph)
    info: dict = {}
    coloring = color_via_2dipath(
        graph, args.seed, max_trials=args.budget_trials,
        directory=args.cache_dir, jobs=args.jobs, info=info)
    cert = check_oriented_coloring(graph, coloring)
    record = _coloring_record(coloring, info, "full-target", args.seed)
    record.update(k=info["k"], t=info["t"], part_size=info["part_size"])
    record["certificate"] = cert.to_json_obj()
    print(f"PASS: {info['colors_used']} colors within budget "
          f"{info['budget']} (k={info['k']}, t={info['t']})")
    _finish(args, record, graph=graph, coloring=coloring)
    return 0


# ------------------------------------------------------------ find-target

def _cmd_find_target(args) -> int:
    base = {"schema": 1, "property": args.property, "k": args.k,
            "t": args.t, "n": args.n, "seed": args.seed,
            "trials": args.trials}
    try:
        if args.property == "comprehensive":
            report = find_comprehensive(args.k, args.t, args.n, args.trials,
                                        args.seed, qr_first=args.qr_first,
                                        jobs=args.jobs)
        else:
            report = find_full(args.k, args.t, args.n, args.trials,
                               args.seed, jobs=args.jobs)
    except NotFound as exc:
        record = dict(base, found=False, attempts=exc.attempts)
        print(f"no certified target in {exc.attempts} trials",
              file=sys.stderr)
        _finish(args, record)
        return 2
    sidecar = {"property": args.property, "k": args.k, "t": args.t,
               "n": report.found.n, "seed": args.seed, "trial": report.trial,
               "certificate_digest": certificate_digest(report.certificate)}
    if args.property == "full":
        sidecar["N"] = args.n
    sidecar = store_target(report.found, sidecar, cache_dir(args.cache_dir))
    record = dict(base, found=True, attempts=report.attempts,
                  trial=report.trial,
                  digest=sidecar["certificate_digest"],
                  arcs_file=sidecar["arcs_file"],
                  sidecar_file=sidecar["sidecar_file"])
    print(f"found after {report.attempts} attempt(s); "
          f"stored {sidecar['arcs_file']}")
    _finish(args, record, graph=report.found)
    return 0


# --------------------------------------------------------------- certify

def _cmd_certify(args) -> int:
    graph = _load_graph(args.graph)
    prop = args.property
    if prop == "comprehensive":
        if args.k is None or args.t is None:
            raise ValueError("comprehensive needs --k and --t")
        cert = check_comprehensive(Tournament(graph.n, graph.arcs),
                                   args.k, args.t)
    elif prop == "full":
        if args.k is None or args.t is None:
            raise ValueError("full needs --k and --t")
        if graph.n % args.k:
            raise ValueError(f"order {graph.n} not divisible by k={args.k}")
        target = FullKPartite(graph.n, graph.arcs, args.k, graph.n // args.k)
        cert = check_full(target, args.t)
    elif prop == "homomorphism":
        if not args.target or not args.coloring:
            raise ValueError("homomorphism needs --target and --coloring")
        image = _load_graph(args.target)
        mapping = coloring_from_json(Path(args.coloring).read_text())
        cert = check_homomorphism(graph, image, mapping)
    else:
        if not args.coloring:
            raise ValueError(f"{prop} needs --coloring")
        coloring = coloring_from_json(Path(args.coloring).read_text())
        checker = {"proper": check_proper,
                   "two-dipath": check_2dipath_coloring,
                   "oriented": check_oriented_coloring}[prop]
        cert = checker(graph, coloring)
    record = cert.to_json_obj()
    if cert.passed():
        print(f"PASS {prop} {dict(cert.parameters)}")
    else:
        w = cert.witness
        print(f"FAIL {prop} {dict(cert.parameters)} "
              f"witness={{'vertices': {list(w.A)}, 'tag': {w.tag!r}}}")
    _finish(args, record, graph=graph)
    return 0 if cert.passed() else 2


# ---------------------------------------------------------------- tables

def _table_payload(which: int):
    if which == 1:
        headers = ("eps", "reference_k", "chained_k", "chained_dev",
                   "binomial_k", "binomial_dev", "within_2")
        rows = [(str(r["eps"]), r["reference_k"], r["chained_k"],
                 r["chained_dev"], r["binomial_k"], r["binomial_dev"],
                 r["within_2"]) for r in comprehensive_table_rows()]
        title = "comprehensive-threshold coefficients"
    elif which == 2:
        data = degeneracy_table_rows()
        deltas = sorted(data[0]["values"])
        headers = ("regime", "parameter", "formula",
                   *(f"delta_{d}" for d in deltas))
        rows = [(r["regime"], r["parameter"], r["formula"],
                 *(r["values"][d] for d in deltas)) for r in data]
        title = "degeneracy-regime budgets"
    else:
        headers = ("coefficient", "t", "k", "reference_t", "reference_k",
                   "matches")
        rows = []
        for r in full_table_rows():
            ref_k = (f"2^{r['reference_t']}" if r["reference_t"] >= 6
                     else str(r["reference_k"]))
            rows.append((str(r["coefficient"]), r["t"], r["k_display"],
                         r["reference_t"], ref_k, r["matches"]))
        title = "full-target coefficient thresholds"
    return headers, rows, title


def _cmd_tables(args) -> int:
    headers, rows, title = _table_payload(args.which)
    if not args.out_dir:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(headers)
        w.writerows(rows)
        return 0
    d = Path(args.out_dir)
    d.mkdir(parents=True, exist_ok=True)
    stem = f"table{args.which}"
    _write_csv(d / f"{stem}.csv", headers, rows)
    record = {"schema": 1, "table": args.which, "headers": list(headers),
              "rows": [list(map(_jsonable, row)) for row in rows]}
    _emit_json(record, d / f"{stem}.json")
    save_table_png(headers, rows, d / f"{stem}.png", title=title)
    print(f"wrote {d / stem}.{{csv,json,png}}")
    return 0


def _jsonable(x):
    return x if isinstance(x, (int, bool, str)) else str(x)


# -------------------------------------------------------------- fixtures

def _cmd_fixtures(args) -> int:
    d = Path(args.out_dir)
    d.mkdir(parents=True, exist_ok=True)
    all_ok = True
    names = []
    for name, fx in fixture_suite().items():
        names.append(name)
        (d / f"{name}.arcs").write_text(serialize_digraph(fx.graph))
        if fx.target is not None:
            (d / f"{name}-target.arcs").write_text(
                serialize_digraph(fx.target))
        if fx.coloring is not None:
            (d / f"{name}-coloring.json").write_text(
                coloring_json(fx.coloring))
        results = verify_fixture(fx)
        ok = all(r["ok"] for r in results)
        all_ok = all_ok and ok
        record = {
            "schema": 1, "name": name, "description": fx.description,
            "coloring": (None if fx.coloring is None
                         else {"kind": fx.coloring.kind,
                               "values": list(fx.coloring.values)}),
            "results": results, "ok": ok,
        }
        _emit_json(record, d / f"{name}.json")
        render_graph_figure(fx.graph, d / f"{name}.png", fx.coloring,
                            title=name)
        print(f"{'ok' if ok else 'MISMATCH'} {name}")
    _emit_json({"schema": 1, "fixtures": names, "all_ok": all_ok},
               d / "index.json")
    return 0 if all_ok else 2


# ----------------------------------------------------------------- parser

def _add_output_opts(p) -> None:
    p.add_argument("--json", metavar="PATH",
                   help="write the result record to this file")
    p.add_argument("--report-dir", metavar="DIR",
                   help="write report.json plus delimited and PNG artifacts")


def _add_search_opts(p) -> None:
    p.add_argument("--seed", type=int, required=True,
                   help="master seed (required: runs are reproducible)")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel trial workers (result is jobs-independent)")
    p.add_argument("--cache-dir", default=None,
                   help="target cache (default: $ORIKIT_CACHE or ./.orikit-cache)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orikit",
        description="construct, certify, and color oriented graphs")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact solvers for small inputs")
    p.add_argument("--what", required=True,
                   choices=("chromatic", "chi2", "chio", "min-order"))
    p.add_argument("graph", nargs="?", help="digraph file (.arcs)")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n-max", type=int)
    _add_output_opts(p)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("color-maxdeg",
                       help="oriented coloring within the max-degree budget")
    p.add_argument("graph")
    p.add_argument("--eps", required=True,
                   help="rational slack, e.g. 1 or 3/10")
    p.add_argument("--budget-trials", type=int, default=30)
    p.add_argument("--case3-k", type=int)
    p.add_argument("--case3-t", type=int)
    _add_search_opts(p)
    _add_output_opts(p)
    p.set_defaults(func=_cmd_color_maxdeg)

    p = sub.add_parser("color-2dipath",
                       help="oriented coloring via a guide coloring and a "
                            "full k-partite target")
    p.add_argument("graph")
    p.add_argument("--budget-trials", type=int, default=50)
    _add_search_opts(p)
    _add_output_opts(p)
    p.set_defaults(func=_cmd_color_2dipath)

    p = sub.add_parser("find-target",
                       help="search for and certify a random target")
    p.add_argument("--property", required=True,
                   choices=("comprehensive", "full"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True,
                   help="tournament order, or part size for full targets")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--qr-first", action="store_true",
                   help="try the quadratic-residue tournament before "
                        "random trials")
    _add_search_opts(p)
    _add_output_opts(p)
    p.set_defaults(func=_cmd_find_target)

    p = sub.add_parser("certify", help="run a checker on serialized input")
    p.add_argument("--property", required=True,
                   choices=("comprehensive", "full", "proper", "two-dipath",
                            "oriented", "homomorphism"))
    p.add_argument("graph")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--coloring", help="coloring JSON file")
    p.add_argument("--target", help="image digraph for homomorphism checks")
    _add_output_opts(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("tables", help="recompute the coefficient tables")
    p.add_argument("--which", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--out-dir",
                   help="write CSV, JSON and PNG here instead of stdout")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("fixtures",
                       help="write the demo graphs, colorings and verdicts")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (NotFound, Stuck, TargetUnavailable, PhiNotTwoDipath) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OrikitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
