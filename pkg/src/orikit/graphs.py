"""Core graph types: oriented graphs, simple graphs, orderings, derived graphs.

An oriented graph is a digraph whose underlying graph is simple: no loops
and never both (u,v) and (v,u).  Vertex ids are dense 0-based integers.
All values are immutable after construction and safe to share.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AntiparallelPair,
    BadVertexId,
    DuplicateArc,
    NotAdjacent,
    ParseError,
    SelfLoop,
)


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs)))
        seen = set()
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) outside vertex range [0,{self.n})")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u},{v})")
            if (v, u) in seen:
                raise ValueError(f"antiparallel pair ({u},{v})/({v},{u})")
            seen.add((u, v))

    def out_masks(self) -> list[int]:
        """out_masks()[u] has bit w set iff arc (u,w) exists."""
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return masks

    def in_masks(self) -> list[int]:
        """in_masks()[v] has bit u set iff arc (u,v) exists."""
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return masks

    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = sorted((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", tuple(norm))
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) outside vertex range [0,{self.n})")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple[int, ...]
    d: int


def underlying(G: OrientedGraph) -> SimpleGraph:
    """Forget arc directions."""
    return SimpleGraph(G.n, tuple((min(u, v), max(u, v)) for u, v in G.arcs))


# ------------------------------------------------------------------ parsing

def _resolve_header(lines: list[tuple[int, str]]):
    if not lines:
        raise ParseError("empty input, expected header 'n <count>'", 0, "")
    line_no, line = lines[0]
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError("expected header 'n <count>'", line_no, line)
    try:
        count = int(parts[1])
    except ValueError:
        raise ParseError("expected header 'n <count>'", line_no, line) from None
    if count < 0:
        raise ParseError("negative vertex count", line_no, line)
    return count


def _is_canonical_int(tok: str) -> bool:
    return tok.isdigit() and (tok == "0" or not tok.startswith("0"))


def parse_digraph(text: str) -> OrientedGraph:
    """Parse edge-list text: header line "n <count>", then one "u v" arc per line.

    Blank lines and '#' comments are ignored.  When every endpoint token is a
    canonical decimal integer the tokens are taken literally as vertex ids;
    otherwise names are interned in first-appearance order.  Either way the
    result is deterministic and simplicity violations are rejected with the
    offending line.
    """
    lines: list[tuple[int, str]] = []
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((i, stripped))
    n = _resolve_header(lines)
    body = lines[1:]

    pairs: list[tuple[int, str, str]] = []
    for line_no, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected two tokens 'u v'", line_no, line)
        pairs.append((line_no, parts[0], parts[1]))

    literal = all(
        _is_canonical_int(a) and _is_canonical_int(b) for _, a, b in pairs)

    names: dict[str, int] = {}

    def resolve(tok: str, line_no: int, line: str) -> int:
        if literal:
            vid = int(tok)
            if vid >= n:
                raise BadVertexId(line_no, line)
            return vid
        if tok not in names:
            if len(names) >= n:
                raise BadVertexId(line_no, line)
            names[tok] = len(names)
        return names[tok]

    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, ta, tb in pairs:
        line = f"{ta} {tb}"
        u = resolve(ta, line_no, line)
        v = resolve(tb, line_no, line)
        if u == v:
            raise SelfLoop(line_no, line)
        if (u, v) in seen:
            raise DuplicateArc(line_no, line)
        if (v, u) in seen:
            raise AntiparallelPair(line_no, line)
        seen.add((u, v))
        arcs.append((u, v))
    return OrientedGraph(n, tuple(arcs))


def serialize_digraph(G: OrientedGraph) -> str:
    """Canonical text form: header then arcs sorted lexicographically."""
    out = [f"n {G.n}"]
    out.extend(f"{u} {v}" for u, v in sorted(G.arcs))
    return "\n".join(out) + "\n"


# ------------------------------------------------------- orderings, derived

def _adjacency_of(G) -> list[set[int]]:
    if isinstance(G, SimpleGraph):
        return G.adjacency()
    return underlying(G).adjacency()


def degeneracy_ordering(G) -> DegeneracyOrdering:
    """Minimum-degree-removal ordering; works on oriented or simple graphs.

    The returned order lists the last-removed vertex first, so every vertex
    has at most d neighbors among the vertices before it.  d is exact and
    witnessed by the ordering.  Ties broken by smallest id.
    """
    adj = _adjacency_of(G)
    n = len(adj)
    deg = [len(a) for a in adj]
    alive = [True] * n
    removal: list[int] = []
    d = 0
    for _ in range(n):
        u = min((v for v in range(n) if alive[v]), key=lambda v: (deg[v], v))
        d = max(d, deg[u])
        alive[u] = False
        removal.append(u)
        for w in adj[u]:
            if alive[w]:
                deg[w] -= 1
    return DegeneracyOrdering(tuple(reversed(removal)), d)


def max_degree(G) -> int:
    adj = _adjacency_of(G)
    return max((len(a) for a in adj), default=0)


def components(G) -> list[tuple[int, ...]]:
    """Connected components of the underlying graph, each sorted, in id order."""
    adj = _adjacency_of(G)
    n = len(adj)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def two_dipath_conflict_graph(G: OrientedGraph) -> SimpleGraph:
    """Simple graph whose proper colorings are exactly the 2-dipath colorings.

    Joins underlying-adjacent pairs and the endpoints of every directed
    2-path u -> v -> w.
    """
    edges = {(min(u, v), max(u, v)) for u, v in G.arcs}
    outs: list[list[int]] = [[] for _ in range(G.n)]
    ins: list[list[int]] = [[] for _ in range(G.n)]
    for u, v in G.arcs:
        outs[u].append(v)
        ins[v].append(u)
    for v in range(G.n):
        for u in ins[v]:
            for w in outs[v]:
                if u != w:
                    edges.add((min(u, w), max(u, w)))
    return SimpleGraph(G.n, tuple(edges))


def oriented_subdivision(G: SimpleGraph) -> OrientedGraph:
    """Replace each edge {u,v} by a fresh vertex x and arcs u->x, x->v (u<v).

    New vertices are numbered n, n+1, ... in sorted edge order, so the result
    is deterministic.  Output has n + |E| vertices and 2|E| arcs, and every
    pair of new arcs at a subdivision vertex forms a directed 2-path.
    """
    arcs: list[tuple[int, int]] = []
    x = G.n
    for u, v in sorted(G.edges):
        arcs.append((u, x))
        arcs.append((x, v))
        x += 1
    return OrientedGraph(G.n + len(G.edges), tuple(arcs))


def orientation_vector(
        G: OrientedGraph, A: Sequence[int], v: int) -> tuple[int, ...]:
    """Sign vector of v against the ordered list A.

    Entry i is +1 when the arc (v, A[i]) exists and -1 when (A[i], v) does.
    Raises NotAdjacent for any A[i] not a neighbor of v.
    """
    arcset = G.arc_set()
    vec = []
    for i, a in enumerate(A):
        if (v, a) in arcset:
            vec.append(1)
        elif (a, v) in arcset:
            vec.append(-1)
        else:
            raise NotAdjacent(i, a, v)
    return tuple(vec)
