"""Bundled demonstration fixtures and the seeded desk corpora."""
from orikit.certify import check_2dipath_coloring, check_oriented_coloring
from orikit.fixtures import (
    desk_corpus_low_degeneracy,
    desk_corpus_maxdeg4,
    directed_cycle,
    directed_path,
    fixture_suite,
    named_simple_graphs,
    random_low_degeneracy_graph,
    random_maxdeg4_graph,
    verify_fixture,
)
from orikit.graphs import components, degeneracy_ordering, max_degree
from orikit.greedy import guide_coloring


def test_suite_names_and_order():
    assert list(fixture_suite()) == [
        "sixcolor-demo",
        "twocolor-demo",
        "fourcolor-demo",
        "homomorphism-demo",
        "two-dipath-not-oriented",
        "qr7-tournament",
        "triangle-subdivision",
    ]


def test_every_fixture_verifies():
    for name, fx in fixture_suite().items():
        results = verify_fixture(fx)
        assert results, name
        assert all(r["ok"] for r in results), (name, results)


def test_expected_failure_is_recorded_with_witness():
    fx = fixture_suite()["two-dipath-not-oriented"]
    rows = {r["check"]: r for r in verify_fixture(fx)}
    assert rows["two-dipath"]["expected"] == "PASS"
    assert rows["oriented"]["expected"] == "FAIL"
    assert rows["oriented"]["ok"]


def test_named_simple_graphs():
    graphs = named_simple_graphs()
    assert set(graphs) == {"triangle", "k4", "c5", "bull", "house", "bowtie"}
    assert graphs["k4"].n == 4 and len(graphs["k4"].edges) == 6
    assert graphs["house"].n == 5 and len(graphs["house"].edges) == 6


def test_directed_path_and_cycle():
    p = directed_path(5)
    assert p.arcs == ((0, 1), (1, 2), (2, 3), (3, 4))
    c = directed_cycle(4)
    assert len(components(c)) == 1
    assert all(max_degree(g) == 2 for g in (c,))


def test_random_generators_deterministic():
    assert random_low_degeneracy_graph(3) == random_low_degeneracy_graph(3)
    assert random_maxdeg4_graph(1000) == random_maxdeg4_graph(1000)


def test_low_degeneracy_corpus_contract():
    corpus = desk_corpus_low_degeneracy(10)
    assert len(corpus) == 10
    for seed, g in corpus:
        assert g.arcs
        assert g.n <= 30
        assert degeneracy_ordering(g).d <= 2
        assert guide_coloring(g).max_color() <= 4


def test_maxdeg4_corpus_contract():
    corpus = desk_corpus_maxdeg4(5)
    assert len(corpus) == 5
    for seed, g in corpus:
        assert max_degree(g) == 4
        assert degeneracy_ordering(g).d <= 3
