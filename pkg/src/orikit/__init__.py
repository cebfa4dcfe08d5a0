"""Construct, certify, and color oriented graphs.

The library builds randomized universal targets (comprehensive tournaments
and full k-partite orientations), certifies their properties exhaustively,
runs greedy homomorphism pipelines that produce verified oriented colorings
within explicit budgets, and recomputes the coefficient threshold tables
from the underlying inequalities.
"""
from __future__ import annotations

__version__ = "0.1.0"

from . import errors
from .graphs import (
    DegeneracyOrdering,
    OrientedGraph,
    SimpleGraph,
    components,
    degeneracy_ordering,
    max_degree,
    orientation_vector,
    oriented_subdivision,
    parse_digraph,
    serialize_digraph,
    two_dipath_conflict_graph,
    underlying,
)
from .certify import (
    Certificate,
    ColoringAssignment,
    Witness,
    certificate_digest,
    certificate_json,
    check_2dipath_coloring,
    check_comprehensive,
    check_full,
    check_homomorphism,
    check_oriented_coloring,
    check_proper,
    coloring_from_json,
    coloring_json,
    count_dominators,
    count_realizers,
)
from .exact import (
    CHIO_CAP,
    CHROMATIC_CAP,
    chi2_exact,
    chio_exact,
    chromatic_coloring,
    chromatic_number,
    min_comprehensive_order,
)
from .targets import (
    FullKPartite,
    SearchReport,
    Tournament,
    cache_dir,
    ensure_comprehensive,
    ensure_full,
    find_comprehensive,
    find_full,
    load_target,
    qr_tournament,
    random_full_orientation,
    random_tournament,
    store_target,
    trial_seed,
)
from .greedy import (
    color_via_2dipath,
    color_via_maxdeg,
    greedy_homomorphism_to_full,
    greedy_homomorphism_to_tournament,
    guide_coloring,
    pullback_coloring,
)
from .bounds import (
    REFERENCE_COMPREHENSIVE_THRESHOLDS,
    REFERENCE_FULL_THRESHOLDS,
    BoundReport,
    bound_degeneracy,
    bound_maxdeg,
    bound_two_dipath,
    comprehensive_coefficient_threshold,
    comprehensive_order,
    comprehensive_table_rows,
    degeneracy_table_rows,
    full_coefficient_threshold,
    full_part_order,
    full_table_rows,
    parse_fraction,
    prior_bounds,
)
from .fixtures import (
    Expectation,
    Fixture,
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

__all__ = [
    "__version__", "errors",
    # graphs
    "OrientedGraph", "SimpleGraph", "DegeneracyOrdering", "parse_digraph",
    "serialize_digraph", "degeneracy_ordering", "max_degree", "components",
    "two_dipath_conflict_graph", "oriented_subdivision", "orientation_vector",
    "underlying",
    # certify
    "ColoringAssignment", "Certificate", "Witness", "check_proper",
    "check_2dipath_coloring", "check_oriented_coloring", "check_homomorphism",
    "check_comprehensive", "check_full", "count_dominators", "count_realizers",
    "certificate_json", "certificate_digest", "coloring_json",
    "coloring_from_json",
    # exact
    "chromatic_number", "chromatic_coloring", "chi2_exact", "chio_exact",
    "min_comprehensive_order", "CHROMATIC_CAP", "CHIO_CAP",
    # targets
    "Tournament", "FullKPartite", "SearchReport", "random_tournament",
    "qr_tournament", "random_full_orientation", "find_comprehensive",
    "find_full", "ensure_comprehensive", "ensure_full", "store_target",
    "load_target", "cache_dir", "trial_seed",
    # greedy
    "greedy_homomorphism_to_tournament", "greedy_homomorphism_to_full",
    "pullback_coloring", "guide_coloring", "color_via_maxdeg",
    "color_via_2dipath",
    # bounds
    "BoundReport", "bound_maxdeg", "bound_degeneracy", "bound_two_dipath",
    "prior_bounds", "full_part_order", "full_coefficient_threshold",
    "comprehensive_coefficient_threshold", "comprehensive_order",
    "comprehensive_table_rows", "degeneracy_table_rows", "full_table_rows",
    "parse_fraction", "REFERENCE_COMPREHENSIVE_THRESHOLDS",
    "REFERENCE_FULL_THRESHOLDS",
    # fixtures
    "Fixture", "Expectation", "fixture_suite", "verify_fixture",
    "named_simple_graphs", "directed_path", "directed_cycle",
    "random_low_degeneracy_graph", "desk_corpus_low_degeneracy",
    "random_maxdeg4_graph", "desk_corpus_maxdeg4",
]
