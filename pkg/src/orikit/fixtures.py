"""Small worked examples with pinned verdicts, plus seeded corpus generators.

The demo fixtures each carry the checks they are expected to pass or fail,
so one call can confirm the checkers reproduce every pinned verdict.  The
corpus generators produce the seeded random instances the heavier pipelines
are exercised on.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .certify import (
    ColoringAssignment,
    check_2dipath_coloring,
    check_comprehensive,
    check_homomorphism,
    check_oriented_coloring,
)
from .exact import chio_exact
from .graphs import (
    OrientedGraph,
    SimpleGraph,
    degeneracy_ordering,
    max_degree,
    oriented_subdivision,
)
from .greedy import guide_coloring
from .targets import qr_tournament


@dataclass(frozen=True)
class Expectation:
    check: str                         # which checker to run
    params: tuple = ()
    status: str = "PASS"
    witness: tuple | None = None       # pinned witness vertices, if any


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    graph: OrientedGraph
    coloring: ColoringAssignment | None = None
    target: OrientedGraph | None = None
    expectations: tuple[Expectation, ...] = field(default_factory=tuple)


def fixture_suite() -> dict[str, Fixture]:
    """All demo fixtures, keyed by name, in presentation order."""
    suite = {}

    g = OrientedGraph(6, ((1, 0), (0, 4), (5, 4), (3, 4),
                          (3, 2), (2, 1), (5, 2), (1, 5)))
    suite["sixcolor-demo"] = Fixture(
        "sixcolor-demo",
        "six vertices whose pinned coloring uses all six colors",
        g, ColoringAssignment((1, 2, 4, 5, 6, 3), "oriented"),
        expectations=(Expectation("oriented"),))

    g = OrientedGraph(4, ((0, 1), (3, 1), (3, 2), (0, 2)))
    suite["twocolor-demo"] = Fixture(
        "twocolor-demo",
        "all arcs run between the two color classes in one direction",
        g, ColoringAssignment((1, 2, 2, 1), "oriented"),
        expectations=(Expectation("oriented"),))

    g = OrientedGraph(4, ((0, 1), (1, 3), (3, 2), (2, 0)))
    suite["fourcolor-demo"] = Fixture(
        "fourcolor-demo",
        "a directed 4-cycle needs all four colors",
        g, ColoringAssignment((1, 2, 4, 3), "oriented"),
        expectations=(Expectation("oriented"),))

    source = OrientedGraph(6, ((3, 0), (4, 0), (0, 5), (3, 1), (1, 4),
                               (5, 1), (3, 2), (4, 2), (2, 5)))
    target = OrientedGraph(5, ((0, 2), (3, 0), (4, 0), (2, 1),
                               (3, 1), (1, 4)))
    suite["homomorphism-demo"] = Fixture(
        "homomorphism-demo",
        "six vertices folded onto a five-vertex image graph",
        source, ColoringAssignment((0, 1, 0, 3, 4, 2), "homomorphism"),
        target=target,
        expectations=(Expectation("homomorphism"),))

    g = OrientedGraph(7, ((0, 1), (0, 2), (1, 2), (3, 4), (4, 5), (5, 6)))
    suite["two-dipath-not-oriented"] = Fixture(
        "two-dipath-not-oriented",
        "a triangle plus a directed path: the pinned coloring respects "
        "2-dipaths but reuses a color pair in both directions",
        g, ColoringAssignment((1, 2, 3, 1, 2, 3, 1), "two_dipath"),
        expectations=(
            Expectation("two-dipath"),
            Expectation("oriented", status="FAIL", witness=(0, 2, 5, 6)),
        ))

    suite["qr7-tournament"] = Fixture(
        "qr7-tournament",
        "the rotational tournament on 7 vertices with jumps {1,2,4}; "
        "the smallest tournament realizing every signed pair",
        qr_tournament(7),
        expectations=(Expectation("comprehensive", (2, 1)),))

    tri = SimpleGraph(3, ((0, 1), (0, 2), (1, 2)))
    suite["triangle-subdivision"] = Fixture(
        "triangle-subdivision",
        "subdividing a triangle into 2-dipaths keeps the oriented "
        "chromatic number at or above the chromatic number",
        oriented_subdivision(tri),
        expectations=(Expectation("chio-at-least", (3,)),))

    return suite


def verify_fixture(fixture: Fixture) -> list[dict]:
    """Run every pinned expectation; each row reports ok plus the verdict."""
    rows = []
    for e in fixture.expectations:
        if e.check == "chio-at-least":
            value = chio_exact(fixture.graph)
            rows.append({"check": e.check, "params": list(e.params),
                         "expected": e.status, "got": "PASS" if value >= e.params[0] else "FAIL",
                         "ok": value >= e.params[0], "value": value})
            continue
        if e.check == "oriented":
            cert = check_oriented_coloring(fixture.graph, fixture.coloring)
        elif e.check == "two-dipath":
            cert = check_2dipath_coloring(fixture.graph, fixture.coloring)
        elif e.check == "homomorphism":
            cert = check_homomorphism(fixture.graph, fixture.target,
                                      fixture.coloring)
        elif e.check == "comprehensive":
            cert = check_comprehensive(fixture.graph, *e.params)
        else:
            raise ValueError(f"unknown check: {e.check!r}")
        ok = cert.status == e.status
        if ok and e.witness is not None:
            ok = cert.witness is not None and tuple(cert.witness.A) == e.witness
        rows.append({"check": e.check, "params": list(e.params),
                     "expected": e.status, "got": cert.status, "ok": ok})
    return rows


# ---------------------------------------------------------- named graphs

def named_simple_graphs() -> dict[str, SimpleGraph]:
    return {
        "triangle": SimpleGraph(3, ((0, 1), (0, 2), (1, 2))),
        "k4": SimpleGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
        "c5": SimpleGraph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
        "bull": SimpleGraph(5, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 4))),
        "house": SimpleGraph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
                                 (1, 4))),
        "bowtie": SimpleGraph(5, ((0, 1), (0, 2), (1, 2), (2, 3), (2, 4),
                                  (3, 4))),
    }


def directed_path(m: int) -> OrientedGraph:
    if m < 2:
        raise ValueError(f"need at least 2 vertices, got {m}")
    return OrientedGraph(m, tuple((i, i + 1) for i in range(m - 1)))


def directed_cycle(m: int) -> OrientedGraph:
    if m < 3:
        raise ValueError(f"need at least 3 vertices, got {m}")
    return OrientedGraph(m, tuple((i, (i + 1) % m) for i in range(m)))


# --------------------------------------------------------------- corpora

def random_low_degeneracy_graph(seed: int) -> OrientedGraph:
    """Seeded graph with 8..30 vertices built with back-degree at most 2."""
    rng = random.Random(seed)
    n = rng.randint(8, 30)
    arcs = []
    for v in range(1, n):
        b = min(rng.choices((0, 1, 2), weights=(15, 45, 40))[0], v)
        for u in rng.sample(range(v), b):
            arcs.append((u, v) if rng.getrandbits(1) else (v, u))
    return OrientedGraph(n, tuple(arcs))


def desk_corpus_low_degeneracy(count: int = 50, base: int = 0,
                               max_guide_colors: int = 4):
    """First `count` seeds from `base` whose graph has an arc and a guide
    coloring within max_guide_colors (keeps the full-target order small)."""
    out = []
    seed = base
    while len(out) < count:
        g = random_low_degeneracy_graph(seed)
        if g.arcs and guide_coloring(g).max_color() <= max_guide_colors:
            out.append((seed, g))
        seed += 1
    return out


def random_maxdeg4_graph(seed: int) -> OrientedGraph:
    """Seeded orientation with 10..24 vertices and degrees capped at 4."""
    rng = random.Random(seed)
    n = rng.randint(10, 24)
    m_target = rng.randint((6 * n) // 5, (8 * n) // 5)
    deg = [0] * n
    chosen = set()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if len(chosen) == m_target:
            break
        if deg[u] < 4 and deg[v] < 4:
            chosen.add((u, v))
            deg[u] += 1
            deg[v] += 1
    arcs = [(u, v) if rng.getrandbits(1) else (v, u)
            for u, v in sorted(chosen)]
    return OrientedGraph(n, tuple(arcs))


def desk_corpus_maxdeg4(count: int = 25, base: int = 1000):
    """First `count` seeds from `base` whose graph has max degree exactly 4
    and degeneracy strictly below it."""
    out = []
    seed = base
    while len(out) < count:
        g = random_maxdeg4_graph(seed)
        if max_degree(g) == 4 and degeneracy_ordering(g).d <= 3:
            out.append((seed, g))
        seed += 1
    return out
