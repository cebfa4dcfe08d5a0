"""Greedy homomorphism construction along degeneracy orderings.

Two inductive schemes (tournament target, full k-partite target guided by a
2-dipath coloring) plus the end-to-end pipelines that pick targets from the
bound formulas, certify them, run the greedy, and re-check their own output.
"""
from __future__ import annotations

from fractions import Fraction

from .bounds import bound_maxdeg, full_part_order
from .certify import (
    ColoringAssignment,
    check_2dipath_coloring,
    check_homomorphism,
    check_oriented_coloring,
)
from .errors import NotFound, PhiNotTwoDipath, Stuck, TargetUnavailable
from .exact import CHROMATIC_CAP, chromatic_coloring
from .graphs import (
    OrientedGraph,
    degeneracy_ordering,
    max_degree,
    components,
    two_dipath_conflict_graph,
)
from .targets import FullKPartite, Tournament, ensure_comprehensive, ensure_full


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _neighbor_lists(G: OrientedGraph):
    adj: list[list[int]] = [[] for _ in range(G.n)]
    for u, v in G.arcs:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    return adj


def greedy_homomorphism_to_tournament(
        G: OrientedGraph, T: Tournament, *,
        debug_counts: bool = False,
        comprehensive_params: tuple[int, int] | None = None,
) -> ColoringAssignment:
    """Inductive homomorphism into a tournament along a degeneracy ordering.

    At each vertex the image must realize the back-neighborhood's sign
    pattern and avoid the images of earlier vertices sharing a later common
    neighbor (so back-neighborhoods always carry distinct images).  Ties go
    to the smallest target id.  Raises Stuck when T is not comprehensive
    enough; with debug_counts and the target's certified (k,t), each step
    additionally asserts the counting bound t*2^(k-|A|) - forbidden <= eligible.
    """
    order = degeneracy_ordering(G).order
    pos = {v: i for i, v in enumerate(order)}
    adj = _neighbor_lists(G)
    arcset = G.arc_set()
    ins_t = T.in_masks()
    outs_t = T.out_masks()
    full = (1 << T.n) - 1
    h: list = [None] * G.n

    for s, v in enumerate(order):
        back = [u for u in adj[v] if pos[u] < s]
        cand = full
        for u in back:
            cand &= ins_t[h[u]] if (v, u) in arcset else outs_t[h[u]]
        forbidden = set()
        for w in adj[v]:
            if pos[w] > s:
                for u2 in adj[w]:
                    if pos[u2] < s:
                        forbidden.add(h[u2])
        eligible = cand
        for img in forbidden:
            eligible &= ~(1 << img)
        if debug_counts and comprehensive_params is not None:
            k, t = comprehensive_params
            if len(back) <= k:
                need = t * (1 << (k - len(back))) - len(forbidden)
                have = eligible.bit_count()
                if have < need:
                    raise AssertionError(
                        f"counting bound broken at step {s + 1}: "
                        f"eligible {have} < {need}")
        if eligible == 0:
            raise Stuck(s + 1, tuple(back), len(forbidden))
        h[v] = _lowest_bit(eligible)

    assignment = ColoringAssignment(tuple(h), "homomorphism")
    cert = check_homomorphism(G, T, assignment)
    if not cert.passed():
        raise RuntimeError(f"greedy output failed self-check: {cert.witness}")
    return assignment


def greedy_homomorphism_to_full(
        G: OrientedGraph, K: FullKPartite,
        phi: ColoringAssignment) -> ColoringAssignment:
    """Inductive homomorphism into a full k-partite target, guided by phi.

    Vertex v lands in part phi(v); the pattern is indexed by the distinct
    images of the back-neighborhood, which is well defined exactly because
    phi is a 2-dipath coloring.  Smallest-id tie-break.
    """
    pre = check_2dipath_coloring(G, phi)
    if not pre.passed():
        raise PhiNotTwoDipath(pre.witness)
    if phi.max_color() > K.k:
        raise ValueError(
            f"guide coloring uses {phi.max_color()} colors, target has k={K.k}")
    order = degeneracy_ordering(G).order
    pos = {v: i for i, v in enumerate(order)}
    adj = _neighbor_lists(G)
    arcset = G.arc_set()
    ins_k = K.in_masks()
    outs_k = K.out_masks()
    part_mask = [((1 << K.N) - 1) << (i * K.N) for i in range(K.k)]
    h: list = [None] * G.n

    for s, v in enumerate(order):
        back = [u for u in adj[v] if pos[u] < s]
        signs: dict[int, int] = {}
        for u in back:
            sign = 1 if (v, u) in arcset else -1
            img = h[u]
            if signs.setdefault(img, sign) != sign:
                # cannot happen once phi passed the 2-dipath check
                raise PhiNotTwoDipath((u, v))
        cand = part_mask[phi.values[v] - 1]
        for img, sign in signs.items():
            cand &= ins_k[img] if sign == 1 else outs_k[img]
        if cand == 0:
            raise Stuck(s + 1, tuple(back), 0)
        h[v] = _lowest_bit(cand)

    assignment = ColoringAssignment(tuple(h), "homomorphism")
    cert = check_homomorphism(G, K, assignment)
    if not cert.passed():
        raise RuntimeError(f"greedy output failed self-check: {cert.witness}")
    return assignment


def pullback_coloring(h: ColoringAssignment) -> ColoringAssignment:
    """Oriented coloring induced by a homomorphism: images ranked 1..m."""
    images = sorted(set(h.values))
    rank = {img: i + 1 for i, img in enumerate(images)}
    return ColoringAssignment(tuple(rank[x] for x in h.values), "oriented")


def guide_coloring(G: OrientedGraph, cap: int = CHROMATIC_CAP) -> ColoringAssignment:
    """2-dipath coloring used to steer the full-target greedy.

    Exact (minimum) under the solver cap; greedy on the conflict graph in
    degeneracy order above it, where the color count is still a valid upper
    bound for the pipeline.
    """
    H = two_dipath_conflict_graph(G)
    if G.n <= cap:
        _, vals = chromatic_coloring(H, cap)
        return ColoringAssignment(vals, "two_dipath")
    adj = H.adjacency()
    order = degeneracy_ordering(H).order
    vals = [0] * G.n
    for v in order:
        used = {vals[u] for u in adj[v] if vals[u]}
        c = 1
        while c in used:
            c += 1
        vals[v] = c
    return ColoringAssignment(tuple(vals), "two_dipath")


# -------------------------------------------------------------- pipelines

def _case1(G: OrientedGraph, eps: Fraction, seed: int, max_trials: int,
           directory, jobs: int, debug_counts: bool):
    delta = max_degree(G)
    n_t = bound_maxdeg(delta, eps, 1).value
    try:
        T, sidecar = ensure_comprehensive(
            delta - 1, delta + 1, n_t, max_trials, seed,
            directory=directory, jobs=jobs)
    except NotFound as exc:
        raise TargetUnavailable(
            f"no ({delta - 1},{delta + 1})-comprehensive tournament of order "
            f"{n_t} in {exc.attempts} trials") from exc
    h = greedy_homomorphism_to_tournament(
        G, T, debug_counts=debug_counts,
        comprehensive_params=(delta - 1, delta + 1))
    return pullback_coloring(h), n_t, sidecar


def color_via_maxdeg(G: OrientedGraph, eps: Fraction, seed: int, *,
                     max_trials: int = 30, directory=None, jobs: int = 1,
                     case3_params: tuple[int, int] | None = None,
                     debug_counts: bool = False,
                     info: dict | None = None):
    """Oriented coloring within the max-degree bound; returns (coloring, case).

    Dispatch: case 1 when degeneracy < max degree (comprehensive target of
    order ceil((ln2+eps)*D^2*2^D)); case 2 for connected regular graphs
    (delete the lex-smallest arc, recurse, give its endpoints two fresh
    colors); case 3 for disconnected regular graphs (one doubled-order
    target).  The output is re-checked before being returned.
    """
    delta = max_degree(G)
    if delta < 2:
        raise ValueError(f"need max degree >= 2, got {delta}")
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    d = degeneracy_ordering(G).d

    if d < delta:
        coloring, budget, sidecar = _case1(
            G, eps, seed, max_trials, directory, jobs, debug_counts)
        case = "case1"
    elif len(components(G)) == 1:
        # connected with d = max degree, hence regular: patch one arc out
        e = min(G.arcs)
        G2 = OrientedGraph(G.n, tuple(a for a in G.arcs if a != e))
        sub, sub_budget, sidecar = _case1(
            G2, eps, seed, max_trials, directory, jobs, debug_counts)
        m = sub.max_color()
        vals = list(sub.values)
        vals[e[0]] = m + 1
        vals[e[1]] = m + 2
        # recoloring the endpoints may orphan their old colors; compress
        rank = {c: i + 1 for i, c in enumerate(sorted(set(vals)))}
        coloring = ColoringAssignment(tuple(rank[c] for c in vals), "oriented")
        budget = sub_budget + 2
        case = "case2"
    else:
        k3, t3 = case3_params if case3_params is not None else (delta, delta + 2)
        n_t = bound_maxdeg(delta, eps, 3).value
        try:
            T, sidecar = ensure_comprehensive(
                k3, t3, n_t, max_trials, seed, directory=directory, jobs=jobs)
        except NotFound as exc:
            raise TargetUnavailable(
                f"no ({k3},{t3})-comprehensive tournament of order {n_t} "
                f"in {exc.attempts} trials") from exc
        h = greedy_homomorphism_to_tournament(
            G, T, debug_counts=debug_counts, comprehensive_params=(k3, t3))
        coloring = pullback_coloring(h)
        budget = n_t
        case = "case3"

    cert = check_oriented_coloring(G, coloring)
    if not cert.passed():
        raise RuntimeError(f"pipeline output failed self-check: {cert.witness}")
    used = coloring.max_color()
    if used > budget:
        raise RuntimeError(f"budget exceeded: {used} > {budget}")
    if info is not None:
        info.update(case=case, colors_used=used, budget=budget,
                    max_degree=delta, degeneracy=d,
                    target_digest=sidecar.get("certificate_digest"))
    return coloring, case


def color_via_2dipath(G: OrientedGraph, seed: int, *,
                      max_trials: int = 50, directory=None, jobs: int = 1,
                      cap: int = CHROMATIC_CAP,
                      info: dict | None = None) -> ColoringAssignment:
    """Oriented coloring via a 2-dipath coloring and a full k-partite target.

    k is the guide coloring's color count, t = max(degeneracy, ceil(log2 k)),
    parts have size ceil((33/10) t^2 2^t); the pullback stays within k*N
    colors and is re-checked before being returned.
    """
    if not G.arcs:
        raise ValueError("need at least one arc")
    phi = guide_coloring(G, cap)
    k = phi.max_color()
    d = degeneracy_ordering(G).d
    t = max(d, (k - 1).bit_length())
    N = full_part_order(t)
    try:
        K, sidecar = ensure_full(k, t, N, max_trials, seed,
                                 directory=directory, jobs=jobs)
    except NotFound as exc:
        raise TargetUnavailable(
            f"no ({k},{t},{N})-full orientation in {exc.attempts} trials"
        ) from exc
    h = greedy_homomorphism_to_full(G, K, phi)
    coloring = pullback_coloring(h)
    cert = check_oriented_coloring(G, coloring)
    if not cert.passed():
        raise RuntimeError(f"pipeline output failed self-check: {cert.witness}")
    used = coloring.max_color()
    if used > k * N:
        raise RuntimeError(f"budget exceeded: {used} > {k * N}")
    if info is not None:
        info.update(k=k, t=t, part_size=N, budget=k * N, colors_used=used,
                    degeneracy=d,
                    phi_source="exact" if G.n <= cap else "greedy",
                    target_digest=sidecar.get("certificate_digest"))
    return coloring
