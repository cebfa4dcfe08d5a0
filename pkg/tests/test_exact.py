"""Exact solvers: chromatic, 2-dipath, oriented chromatic, smallest order."""
import pytest

from orikit.certify import ColoringAssignment, check_proper
from orikit.errors import SearchSpaceTooLarge, TooLarge
from orikit.exact import (
    CHROMATIC_CAP,
    chi2_exact,
    chio_exact,
    chromatic_coloring,
    chromatic_number,
    min_comprehensive_order,
)
from orikit.graphs import OrientedGraph, SimpleGraph, oriented_subdivision

TRIANGLE = SimpleGraph(3, ((0, 1), (0, 2), (1, 2)))
K4 = SimpleGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
P4 = OrientedGraph(4, ((0, 1), (1, 2), (2, 3)))
C5 = OrientedGraph(5, tuple((i, (i + 1) % 5) for i in range(5)))


def test_chromatic_small():
    assert chromatic_number(TRIANGLE) == 3
    assert chromatic_number(K4) == 4
    assert chromatic_number(SimpleGraph(5, tuple(
        (i, (i + 1) % 5) for i in range(5)))) == 3
    assert chromatic_number(SimpleGraph(3, ())) == 1
    assert chromatic_number(SimpleGraph(0, ())) == 0


def test_chromatic_coloring_is_proper_and_minimum():
    num, vals = chromatic_coloring(K4)
    assert num == 4
    g = OrientedGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    c = ColoringAssignment(vals, "proper")
    assert check_proper(g, c).passed()


def test_chromatic_cap():
    big = SimpleGraph(CHROMATIC_CAP + 1, ())
    with pytest.raises(TooLarge):
        chromatic_number(big)


def test_chi2_values():
    assert chi2_exact(P4) == 3
    assert chi2_exact(C5) == 5
    assert chi2_exact(OrientedGraph(2, ((0, 1),))) == 2
    assert chi2_exact(OrientedGraph(1, ())) == 1


def test_chio_values():
    assert chio_exact(P4) == 3
    assert chio_exact(C5) == 5
    assert chio_exact(OrientedGraph(3, ((0, 1), (1, 2), (2, 0)))) == 3
    assert chio_exact(OrientedGraph(1, ())) == 1


def test_chio_subdivided_k4():
    assert chio_exact(oriented_subdivision(K4)) == 5


def test_chio_within_sandwich_on_tournament_of_order_5():
    # a tournament needs n colors: every pair is an arc
    from orikit.targets import random_tournament
    T = random_tournament(5, 3)
    assert chio_exact(T) == 5


def test_min_comprehensive_order_tiny():
    # (1,1): every vertex needs an in- and an out-dominator; C3 works
    assert min_comprehensive_order(1, 1, 4) == 3
    assert min_comprehensive_order(1, 1, 2) is None


def test_min_comprehensive_order_cap():
    with pytest.raises(SearchSpaceTooLarge):
        min_comprehensive_order(2, 1, 10_000)
