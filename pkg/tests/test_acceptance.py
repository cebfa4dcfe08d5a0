"""Acceptance gate: the package's end-to-end shipping criteria.

Each criterion prints a single `CRITERION n: PASS/FAIL` line (per row for the
bracketing table, whose reference values are approximations with an
unspecified rounding pipeline; rows outside the +/-2 bracket fail here
honestly rather than being patched over).
"""
import json
import random
import time
from fractions import Fraction

import pytest

from orikit.bounds import (
    bound_two_dipath,
    comprehensive_table_rows,
    full_table_rows,
)
from orikit.certify import check_comprehensive, check_oriented_coloring
from orikit.cli import main
from orikit.exact import chio_exact, chromatic_number, min_comprehensive_order
from orikit.fixtures import (
    desk_corpus_low_degeneracy,
    desk_corpus_maxdeg4,
    directed_cycle,
    directed_path,
    fixture_suite,
    named_simple_graphs,
    verify_fixture,
)
from orikit.graphs import OrientedGraph, oriented_subdivision, serialize_digraph
from orikit.greedy import color_via_2dipath, color_via_maxdeg
from orikit.targets import ensure_full, find_comprehensive


def _report(num: str, ok: bool, detail: str) -> None:
    print(f"CRITERION {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


# 1 ------------------------------------------------------------------------

def test_criterion_01_fixture_fidelity():
    t0 = time.perf_counter()
    bad = []
    for name, fx in fixture_suite().items():
        for r in verify_fixture(fx):
            if not r["ok"]:
                bad.append((name, r))
    elapsed = time.perf_counter() - t0
    _report("1", not bad and elapsed < 1.0,
            f"all fixture expectations hold in {elapsed:.3f}s "
            f"(limit 1s); mismatches: {bad}")


# 2 ------------------------------------------------------------------------

def test_criterion_02_smallest_comprehensive_order():
    t0 = time.perf_counter()
    at7 = min_comprehensive_order(2, 1, 7)
    at6 = min_comprehensive_order(2, 1, 6)
    elapsed = time.perf_counter() - t0
    _report("2", at7 == 7 and at6 is None and elapsed < 300,
            f"min order (2,1): n_max=7 -> {at7}, n_max=6 -> "
            f"{'absent' if at6 is None else at6} in {elapsed:.2f}s "
            f"(limit 300s)")


# 3 ------------------------------------------------------------------------

def test_criterion_03_full_thresholds_exact():
    t0 = time.perf_counter()
    rows = full_table_rows()
    elapsed = time.perf_counter() - t0
    bad = [(str(r["coefficient"]), r["t"], r["reference_t"])
           for r in rows if not r["matches"]]
    _report("3", len(rows) == 9 and not bad and elapsed < 10,
            f"nine threshold rows exact in {elapsed:.2f}s (limit 10s); "
            f"mismatches: {bad}")


# 4 ------------------------------------------------------------------------

TABLE_ROWS = comprehensive_table_rows()


@pytest.mark.parametrize("row", TABLE_ROWS,
                         ids=[f"eps={r['eps']}" for r in TABLE_ROWS])
def test_criterion_04_bracketing_row(row):
    _report(f"4[eps={row['eps']}]", row["within_2"],
            f"reference k={row['reference_k']}, chained {row['chained_k']} "
            f"(dev {row['chained_dev']:+d}), binomial {row['binomial_k']} "
            f"(dev {row['binomial_dev']:+d}); tolerance +/-2 on at least "
            f"one variant")


def test_criterion_04_monotone_in_eps():
    # rows are ordered by decreasing eps; both scans must be nondecreasing
    chained = [r["chained_k"] for r in TABLE_ROWS]
    binomial = [r["binomial_k"] for r in TABLE_ROWS]
    ok = (chained == sorted(chained) and binomial == sorted(binomial))
    _report("4[monotone]", ok,
            f"chained {chained}, binomial {binomial} both nondecreasing "
            f"as eps shrinks")


# 5 ------------------------------------------------------------------------

def test_criterion_05_downgrade_property_suite():
    instances = []
    for seed in range(100, 110):
        instances.append((2, 2, find_comprehensive(2, 2, 64, 20, seed)))
    for seed in range(200, 210):
        instances.append((3, 2, find_comprehensive(3, 2, 256, 20, seed)))
    failures = []
    for k, t, rep in instances:
        if not check_comprehensive(rep.found, k - 1, 2 * t).passed():
            failures.append((k, t, rep.seed))
    _report("5", len(instances) >= 20 and not failures,
            f"{len(instances)} certified tournaments (k in {{2,3}}, "
            f"n in {{64,256}}); downgraded (k-1, 2t) failures: {failures}")


# 6 ------------------------------------------------------------------------

def test_criterion_06_2dipath_end_to_end(target_cache):
    t0 = time.perf_counter()
    ensure_full(3, 2, 53, max_trials=50, seed=6, directory=target_cache)
    target_s = time.perf_counter() - t0

    cases = list(desk_corpus_low_degeneracy(50))
    k4 = named_simple_graphs()["k4"]
    cases.append(("p10", directed_path(10)))
    cases.append(("subdiv-k4", oriented_subdivision(k4)))
    problems = []
    for tag, g in cases:
        info: dict = {}
        coloring = color_via_2dipath(g, seed=11, directory=target_cache,
                                     info=info)
        used = coloring.max_color()
        budget = bound_two_dipath(info["k"], info["t"]).value
        if not check_oriented_coloring(g, coloring).passed():
            problems.append((tag, "certificate"))
        if used > budget:
            problems.append((tag, f"colors {used} > bound {budget}"))
        if g.n <= 12 and used < chio_exact(g):
            problems.append((tag, "below exact optimum"))
    _report("6", not problems and target_s < 600,
            f"{len(cases)} pipelines certified within bounds; "
            f"(3,2,53)-full target ready in {target_s:.2f}s (limit 600s); "
            f"problems: {problems}")


# 7 ------------------------------------------------------------------------

def test_criterion_07_maxdeg_end_to_end(target_cache):
    t0 = time.perf_counter()
    problems = []
    for seed, g in desk_corpus_maxdeg4(25):
        info: dict = {}
        coloring, case = color_via_maxdeg(g, Fraction(1), seed=17,
                                          directory=target_cache, info=info)
        if case != "case1":
            problems.append((seed, f"routed to {case}"))
        if info["budget"] > 434:
            problems.append((seed, f"target order {info['budget']} > 434"))
        if coloring.max_color() > info["budget"]:
            problems.append((seed, "over budget"))
        if not check_oriented_coloring(g, coloring).passed():
            problems.append((seed, "certificate"))
    for m in (5, 6, 7, 8, 9):
        info = {}
        coloring, case = color_via_maxdeg(directed_cycle(m), Fraction(1),
                                          seed=17, directory=target_cache,
                                          info=info)
        if case != "case2":
            problems.append((f"c{m}", f"routed to {case}"))
        if coloring.max_color() > info["budget"]:
            problems.append((f"c{m}", "over budget"))
    elapsed = time.perf_counter() - t0
    _report("7", not problems and elapsed < 1800,
            f"25 case-1 graphs and 5 directed cycles colored in "
            f"{elapsed:.2f}s (limit 1800s); problems: {problems}")


# 8 ------------------------------------------------------------------------

def _random_small_digraph(seed: int) -> OrientedGraph:
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            pick = rng.randrange(3)
            if pick == 1:
                arcs.append((u, v))
            elif pick == 2:
                arcs.append((v, u))
    return OrientedGraph(n, tuple(arcs))


def test_criterion_08_oracle_sandwich():
    from orikit.exact import chi2_exact
    violations = []
    for seed in range(200):
        g = _random_small_digraph(seed)
        chi2 = chi2_exact(g)
        chio = chio_exact(g)
        if not (chi2 <= chio <= (1 << chi2) - 1):
            violations.append((seed, chi2, chio))
    _report("8", not violations,
            f"chi2 <= chio <= 2^chi2 - 1 on 200 seeded graphs (n <= 9); "
            f"violations: {violations}")


# 9 ------------------------------------------------------------------------

def test_criterion_09_subdivision_inequality():
    graphs = named_simple_graphs()
    picks = ("triangle", "k4", "c5", "bull", "house")
    t0 = time.perf_counter()
    results = {}
    for name in picks:
        G = graphs[name]
        results[name] = (chio_exact(oriented_subdivision(G)),
                         chromatic_number(G))
    elapsed = time.perf_counter() - t0
    bad = {n: v for n, v in results.items() if v[0] < v[1]}
    _report("9", not bad and elapsed < 300,
            f"chio(subdivision) >= chromatic on {list(picks)} in "
            f"{elapsed:.2f}s (limit 300s): {results}; violations: {bad}")


# 10 -----------------------------------------------------------------------

def test_criterion_10_jobs_byte_determinism(tmp_path):
    graphs_dir = tmp_path / "graphs"
    graphs_dir.mkdir()
    runs = []  # (tag, argv-without-jobs/cache/json)
    for seed, g in desk_corpus_low_degeneracy(50):
        f = graphs_dir / f"low-{seed}.arcs"
        f.write_text(serialize_digraph(g))
        runs.append((f"low-{seed}", ["color-2dipath", str(f), "--seed", "11"]))
    p10 = graphs_dir / "p10.arcs"
    p10.write_text(serialize_digraph(directed_path(10)))
    runs.append(("p10", ["color-2dipath", str(p10), "--seed", "11"]))
    sub = graphs_dir / "subdiv-k4.arcs"
    sub.write_text(serialize_digraph(
        oriented_subdivision(named_simple_graphs()["k4"])))
    runs.append(("subdiv-k4", ["color-2dipath", str(sub), "--seed", "11"]))
    for seed, g in desk_corpus_maxdeg4(25):
        f = graphs_dir / f"max-{seed}.arcs"
        f.write_text(serialize_digraph(g))
        runs.append((f"max-{seed}",
                     ["color-maxdeg", str(f), "--eps", "1", "--seed", "17"]))
    for m in (5, 6, 7, 8, 9):
        f = graphs_dir / f"c{m}.arcs"
        f.write_text(serialize_digraph(directed_cycle(m)))
        runs.append((f"c{m}",
                     ["color-maxdeg", str(f), "--eps", "1", "--seed", "17"]))

    outputs: dict[str, dict[str, bytes]] = {"1": {}, "4": {}}
    for jobs in ("1", "4"):
        cache = tmp_path / f"cache-j{jobs}"
        for tag, argv in runs:
            out = tmp_path / f"{tag}-j{jobs}.json"
            rc = main(argv + ["--jobs", jobs, "--cache-dir", str(cache),
                              "--json", str(out)])
            assert rc == 0, (tag, jobs)
            outputs[jobs][tag] = out.read_bytes()
    mismatched = [tag for tag, _ in runs
                  if outputs["1"][tag] != outputs["4"][tag]]
    # every record parses and carries the schema marker
    sample = json.loads(outputs["1"]["p10"])
    _report("10", not mismatched and sample["schema"] == 1,
            f"{len(runs)} pipeline records byte-identical across "
            f"--jobs 1 and 4; mismatches: {mismatched}")
