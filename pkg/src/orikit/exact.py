"""Small-instance brute-force oracles.

Exact chromatic number, exact 2-dipath and oriented chromatic numbers, and
exhaustive minimum-order search for comprehensive tournaments.  These anchor
the package's acceptance tests; caps keep every call interactive.
"""
from __future__ import annotations

from itertools import combinations

from .errors import SearchSpaceTooLarge, TooLarge
from .graphs import OrientedGraph, SimpleGraph, two_dipath_conflict_graph

CHROMATIC_CAP = 16
CHIO_CAP = 12
MIN_ORDER_CAP = 7


def _greedy_clique(adj: list[set[int]]) -> list[int]:
    order = sorted(range(len(adj)), key=lambda v: (-len(adj[v]), v))
    clique: list[int] = []
    for v in order:
        if all(v in adj[u] for u in clique):
            clique.append(v)
    return clique


def chromatic_coloring(G: SimpleGraph, cap: int = CHROMATIC_CAP):
    """Exact chromatic number and a witness coloring, by branch and bound.

    A greedy clique seeds the lower bound and gets pre-colored; branching
    tries colors 1..used+1 so color classes are explored once each.
    """
    if G.n > cap:
        raise TooLarge(G.n, cap)
    if G.n == 0:
        return 0, ()
    adj = G.adjacency()
    clique = _greedy_clique(adj)
    lb = max(1, len(clique))
    order = clique + sorted((v for v in range(G.n) if v not in clique),
                            key=lambda v: (-len(adj[v]), v))
    colors = [0] * G.n
    best = G.n + 1
    best_assign: list[int] = []

    def dfs(i: int, used: int):
        nonlocal best, best_assign
        if used >= best:
            return
        if i == G.n:
            best = used
            best_assign = colors.copy()
            return
        v = order[i]
        blocked = {colors[u] for u in adj[v] if colors[u]}
        for c in range(1, min(used + 1, best - 1) + 1):
            if c in blocked:
                continue
            colors[v] = c
            dfs(i + 1, max(used, c))
            colors[v] = 0
            if best == lb:
                return

    dfs(0, 0)
    return best, tuple(best_assign)


def chromatic_number(G: SimpleGraph, cap: int = CHROMATIC_CAP) -> int:
    return chromatic_coloring(G, cap)[0]


def chi2_exact(G: OrientedGraph, cap: int = CHROMATIC_CAP) -> int:
    """Exact 2-dipath chromatic number: chromatic number of the conflict graph."""
    if G.n > cap:
        raise TooLarge(G.n, cap)
    return chromatic_number(two_dipath_conflict_graph(G), cap)


def chio_exact(G: OrientedGraph, cap: int = CHIO_CAP) -> int:
    """Exact oriented chromatic number by backtracking.

    The search places colors along a static order while maintaining the
    color-pair orientation table; a pair (a,b) enters the table the moment an
    arc between classes a and b is committed, so two neighbors colored within
    the same step cannot sneak in antisymmetric pair violations.
    """
    if G.n > cap:
        raise TooLarge(G.n, cap)
    if G.n == 0:
        return 0
    n = G.n
    arcset = G.arc_set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in G.arcs:
        adj[u].append(v)
        adj[v].append(u)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    colors = [0] * n
    pair_count: dict[tuple[int, int], int] = {}
    best = n  # all-distinct colors always form an oriented coloring

    def dfs(i: int, used: int):
        nonlocal best
        if used >= best:
            return
        if i == n:
            best = used
            return
        v = order[i]
        for c in range(1, min(used + 1, best - 1) + 1):
            ok = True
            added: list[tuple[int, int]] = []
            for u in adj[v]:
                cu = colors[u]
                if cu == 0:
                    continue
                if cu == c:
                    ok = False
                    break
                pair = (cu, c) if (u, v) in arcset else (c, cu)
                if pair_count.get((pair[1], pair[0]), 0):
                    ok = False
                    break
                pair_count[pair] = pair_count.get(pair, 0) + 1
                added.append(pair)
            if ok:
                colors[v] = c
                dfs(i + 1, max(used, c))
                colors[v] = 0
            for pair in added:
                pair_count[pair] -= 1

    dfs(0, 0)
    return best


# ------------------------------------------------- smallest comprehensive

def _has_comprehensive_tournament(n: int, k: int, t: int) -> bool:
    """Does some tournament on n vertices satisfy the (k,t) property?

    Enumerates orientations of the pairs not touching vertex 0; vertex 0's
    out-neighborhood can be fixed to a prefix {1..j} up to relabeling.  A
    degree prefilter (every vertex needs in- and out-degree >= t*2^(k-1))
    rejects most candidates before the subset sweep.
    """
    if n <= k:
        return False
    degree_need = t * (1 << (k - 1))
    pairs = [(u, v) for u in range(1, n) for v in range(u + 1, n)]
    m = len(pairs)
    pats = [tuple(1 if (b >> (k - 1 - i)) & 1 else -1 for i in range(k))
            for b in range(1 << k)]
    subsets = list(combinations(range(n), k))
    full = (1 << n) - 1

    for j in range(n):
        base_out0 = 0
        for w in range(1, j + 1):
            base_out0 |= 1 << w
        back_to_zero = [w for w in range(j + 1, n)]
        for bits in range(1 << m):
            outs = [0] * n
            outs[0] = base_out0
            for w in back_to_zero:
                outs[w] |= 1  # arcs w -> 0 for w outside the out-prefix
            for idx, (u, v) in enumerate(pairs):
                if (bits >> idx) & 1:
                    outs[u] |= 1 << v
                else:
                    outs[v] |= 1 << u
            ins = [0] * n
            for u in range(n):
                rest = full & ~outs[u] & ~(1 << u)
                ins[u] = rest
            if any(outs[u].bit_count() < degree_need
                   or ins[u].bit_count() < degree_need for u in range(n)):
                continue
            good = True
            for U in subsets:
                for a in pats:
                    mm = full
                    for u, s in zip(U, a):
                        mm &= ins[u] if s == 1 else outs[u]
                        if mm == 0:
                            break
                    if mm.bit_count() < t:
                        good = False
                        break
                if not good:
                    break
            if good:
                return True
    return False


def min_comprehensive_order(k: int, t: int, n_max: int,
                            cap: int = MIN_ORDER_CAP):
    """Smallest n <= n_max carrying a (k,t)-comprehensive tournament, else None.

    Exhaustive over all tournaments up to prefix symmetry on vertex 0; only
    feasible for tiny parameters, hence the cap.
    """
    if n_max > cap:
        raise SearchSpaceTooLarge(n_max, cap)
    for n in range(k + 1, n_max + 1):
        if _has_comprehensive_tournament(n, k, t):
            return n
    return None
