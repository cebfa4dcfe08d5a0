"""Certifying checkers for colorings, homomorphisms, and target properties.

Every checker returns a Certificate: PASS, or FAIL with the lexicographically
smallest violation as an independently re-checkable witness.  Downstream
claims are accepted only when these pass.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Optional

import numpy as np

from .errors import NotATournament, PartialColoring, TargetIdOutOfRange
from .graphs import OrientedGraph, two_dipath_conflict_graph

if TYPE_CHECKING:
    from .targets import FullKPartite

KINDS = ("proper", "two_dipath", "oriented", "homomorphism")


@dataclass(frozen=True)
class ColoringAssignment:
    """Total vertex assignment: colors 1..max, or target ids for kind homomorphism."""

    values: tuple
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown assignment kind {self.kind!r}")
        object.__setattr__(self, "values", tuple(self.values))
        present = [v for v in self.values if v is not None]
        if self.kind == "homomorphism":
            if any(v < 0 for v in present):
                raise ValueError("homomorphism images must be >= 0")
        else:
            if any(v < 1 for v in present):
                raise ValueError("colors must be >= 1")
            # color set must be exactly {1..max}, no gaps
            if len(present) == len(self.values) and present:
                used = set(present)
                if used != set(range(1, max(used) + 1)):
                    raise ValueError(f"color set {sorted(used)} is not 1..max")

    def max_color(self) -> int:
        return max((v for v in self.values if v is not None), default=0)


@dataclass(frozen=True)
class Witness:
    part: Optional[int]
    A: tuple
    a: tuple
    tag: str


@dataclass(frozen=True)
class Certificate:
    status: str  # PASS | FAIL
    property: str
    parameters: tuple  # ((key, value), ...)
    witness: Optional[Witness] = None

    def passed(self) -> bool:
        return self.status == "PASS"

    def to_json_obj(self) -> dict:
        w = None
        if self.witness is not None:
            w = {
                "part": self.witness.part,
                "A": list(self.witness.A),
                "a": list(self.witness.a),
                "tag": self.witness.tag,
            }
        return {
            "schema": 1,
            "status": self.status,
            "property": self.property,
            "parameters": dict(self.parameters),
            "witness": w,
        }


def certificate_json(cert: Certificate) -> str:
    return json.dumps(cert.to_json_obj(), sort_keys=True, indent=2) + "\n"


def certificate_digest(cert: Certificate) -> str:
    return hashlib.sha256(certificate_json(cert).encode()).hexdigest()


def coloring_json(c: ColoringAssignment) -> str:
    obj = {"schema": 1, "kind": c.kind, "values": list(c.values)}
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def coloring_from_json(text: str) -> ColoringAssignment:
    obj = json.loads(text)
    return ColoringAssignment(tuple(obj["values"]), obj["kind"])


def _require_total(G: OrientedGraph, c: ColoringAssignment):
    if len(c.values) < G.n:
        raise PartialColoring(len(c.values))
    for v in range(G.n):
        if c.values[v] is None:
            raise PartialColoring(v)


def _pass(prop: str, params) -> Certificate:
    return Certificate("PASS", prop, tuple(params))


def _fail(prop: str, params, witness: Witness) -> Certificate:
    return Certificate("FAIL", prop, tuple(params), witness)


# ------------------------------------------------------------- colorings

def check_proper(G: OrientedGraph, c: ColoringAssignment) -> Certificate:
    """PASS iff no arc joins same-colored vertices."""
    _require_total(G, c)
    params = (("n", G.n), ("colors", c.max_color()))
    for u, v in sorted(G.arcs):
        if c.values[u] == c.values[v]:
            return _fail("proper", params,
                         Witness(None, (u, v), (), "same-color-arc"))
    return _pass("proper", params)


def check_2dipath_coloring(G: OrientedGraph, c: ColoringAssignment) -> Certificate:
    """PASS iff c is proper on the 2-dipath conflict graph."""
    _require_total(G, c)
    params = (("n", G.n), ("colors", c.max_color()))
    H = two_dipath_conflict_graph(G)
    for u, w in sorted(H.edges):
        if c.values[u] == c.values[w]:
            return _fail("two-dipath", params,
                         Witness(None, (u, w), (), "conflict-pair-same-color"))
    return _pass("two-dipath", params)


def check_oriented_coloring(G: OrientedGraph, c: ColoringAssignment) -> Certificate:
    """PASS iff proper and the color-pair orientation relation is antisymmetric.

    A violation is a pair of arcs (u,v), (x,y) with c(u)=c(y) and c(v)=c(x);
    the witness lists the two arcs in the order they are first reached scanning
    arcs lexicographically.
    """
    _require_total(G, c)
    params = (("n", G.n), ("colors", c.max_color()))
    for u, v in sorted(G.arcs):
        if c.values[u] == c.values[v]:
            return _fail("oriented", params,
                         Witness(None, (u, v), (), "same-color-arc"))
    first_arc: dict[tuple, tuple] = {}
    for u, v in sorted(G.arcs):
        pair = (c.values[u], c.values[v])
        rev = (pair[1], pair[0])
        if rev in first_arc:
            x, y = first_arc[rev]
            return _fail("oriented", params,
                         Witness(None, (x, y, u, v), (), "conflicting-arc-pair"))
        first_arc.setdefault(pair, (u, v))
    return _pass("oriented", params)


def check_homomorphism(G: OrientedGraph, H: OrientedGraph,
                       h: ColoringAssignment) -> Certificate:
    """PASS iff every arc of G maps to an arc of H, preserving direction."""
    _require_total(G, h)
    for v in range(G.n):
        img = h.values[v]
        if not (0 <= img < H.n):
            raise TargetIdOutOfRange(v, img, H.n)
    params = (("n", G.n), ("target_n", H.n))
    harcs = H.arc_set()
    for u, v in sorted(G.arcs):
        if (h.values[u], h.values[v]) not in harcs:
            return _fail("homomorphism", params,
                         Witness(None, (u, v), (), "arc-not-preserved"))
    return _pass("homomorphism", params)


# --------------------------------------------------------- comprehensive

def _assert_tournament(T: OrientedGraph):
    outs = T.out_masks()
    ins = T.in_masks()
    for u in range(T.n):
        cover = outs[u] | ins[u] | (1 << u)
        if cover != (1 << T.n) - 1:
            v = ((~cover) & ((1 << T.n) - 1)).bit_length() - 1
            raise NotATournament(min(u, v), max(u, v))


def _patterns(k: int):
    """All sign vectors of length k in lexicographic order (-1 before +1)."""
    out = []
    for bits in range(1 << k):
        out.append(tuple(1 if (bits >> (k - 1 - i)) & 1 else -1
                         for i in range(k)))
    return out


def _comprehensive_generic(T: OrientedGraph, k: int, t: int):
    """Reference path: subset/pattern loops over bitmasks, first violation."""
    outs = T.out_masks()
    ins = T.in_masks()
    pats = _patterns(k)
    full = (1 << T.n) - 1
    for U in combinations(range(T.n), k):
        for a in pats:
            # z realizes a against U iff z -> U[i] exactly when a[i] = +1
            m = full
            for u, s in zip(U, a):
                m &= ins[u] if s == 1 else outs[u]
                if m == 0:
                    break
            if m.bit_count() < t:
                return U, a
    return None


def _comprehensive_k2_numpy(T: OrientedGraph, t: int):
    n = T.n
    M = np.zeros((n, n), dtype=np.float64)
    for u, v in T.arcs:
        M[u, v] = 1.0
    Mt = M.T
    sq = M @ M
    # pattern order (-1,-1) < (-1,+1) < (+1,-1) < (+1,+1)
    arr = np.stack([M @ Mt, sq, sq.T, Mt @ M])
    mn = arr.min(axis=0)
    iu = np.triu_indices(n, k=1)
    bad = mn[iu] < t
    if not bad.any():
        return None
    flat = int(np.argmax(bad))
    u1, u2 = int(iu[0][flat]), int(iu[1][flat])
    pat_idx = int(np.argmax(arr[:, u1, u2] < t))
    return (u1, u2), _patterns(2)[pat_idx]


def _comprehensive_k3_numpy(T: OrientedGraph, t: int):
    n = T.n
    M = np.zeros((n, n), dtype=np.float64)
    for u, v in T.arcs:
        M[u, v] = 1.0
    Mt = M.T
    pats = _patterns(3)
    for u1 in range(n - 2):
        cols = np.arange(u1 + 1, n)
        if len(cols) < 2:
            break
        blocks = []
        # split candidate rows z by their sign at u1: b1=-1 means u1 -> z
        for rows_mask in (M[u1] > 0.5, Mt[u1] > 0.5):
            # Gm[r, j] = 1 iff z_r -> col_j (sign +1 at col_j); Gt the reverse
            Gm = M[rows_mask][:, cols]
            Gt = Mt[rows_mask][:, cols]
            Cmm = Gt.T @ Gt      # (b2,b3) = (-1,-1)
            Cmp = Gt.T @ Gm      # (-1,+1)
            Cpm = Cmp.T          # (+1,-1)
            Cpp = Gm.T @ Gm      # (+1,+1)
            blocks.extend([Cmm, Cmp, Cpm, Cpp])
        arr = np.stack(blocks)   # index = pattern rank in lex order
        mn = arr.min(axis=0)
        m = len(cols)
        iu = np.triu_indices(m, k=1)
        bad = mn[iu] < t
        if bad.any():
            flat = int(np.argmax(bad))
            i2, i3 = int(iu[0][flat]), int(iu[1][flat])
            pat_idx = int(np.argmax(arr[:, i2, i3] < t))
            return (u1, int(cols[i2]), int(cols[i3])), pats[pat_idx]
    return None


def check_comprehensive(T: OrientedGraph, k: int, t: int) -> Certificate:
    """PASS iff every k-subset is dominated in every sign pattern by >= t vertices.

    Exhaustive.  FAIL carries the lexicographically first violating (U, a).
    """
    if not (1 <= k < T.n):
        raise ValueError(f"need 1 <= k < n, got k={k}, n={T.n}")
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")
    _assert_tournament(T)
    params = (("k", k), ("t", t), ("n", T.n))

    if k == 1:
        outs = T.out_masks()
        ins = T.in_masks()
        for u in range(T.n):
            if outs[u].bit_count() < t:      # pattern (-1): arcs u -> z
                return _fail("comprehensive", params,
                             Witness(None, (u,), (-1,), "undominated-pattern"))
            if ins[u].bit_count() < t:       # pattern (+1): arcs z -> u
                return _fail("comprehensive", params,
                             Witness(None, (u,), (1,), "undominated-pattern"))
        return _pass("comprehensive", params)

    if k == 2 and T.n >= 3:
        viol = _comprehensive_k2_numpy(T, t)
    elif k == 3 and T.n >= 4:
        viol = _comprehensive_k3_numpy(T, t)
    else:
        viol = _comprehensive_generic(T, k, t)
    if viol is None:
        return _pass("comprehensive", params)
    U, a = viol
    return _fail("comprehensive", params,
                 Witness(None, tuple(U), tuple(a), "undominated-pattern"))


def count_dominators(T: OrientedGraph, U, a) -> int:
    """|{z : F(U, z, T) = a}| — used to re-verify witnesses."""
    outs = T.out_masks()
    ins = T.in_masks()
    m = (1 << T.n) - 1
    for u, s in zip(U, a):
        m &= ins[u] if s == 1 else outs[u]
    return m.bit_count()


# ------------------------------------------------------------------ full

def check_full(K: "FullKPartite", t: int) -> Certificate:
    """PASS iff each part realizes every sign pattern against every outside
    set A with 1 <= |A| <= t.  Pattern length follows |A|.  Exhaustive."""
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")
    outs = K.out_masks()
    ins = K.in_masks()
    N = K.N
    params = (("k", K.k), ("t", t), ("N", N), ("n", K.n))
    others_by_part = [
        [v for v in range(K.n) if v // N != i] for i in range(K.k)]

    for i in range(K.k):
        part_mask = ((1 << N) - 1) << (i * N)
        others = others_by_part[i]
        for size in range(1, min(t, len(others)) + 1):
            for A in combinations(others, size):
                hit = _first_unrealized(part_mask, A, ins, outs)
                if hit is not None:
                    return _fail("full", params,
                                 Witness(i, tuple(A), hit, "unrealized-pattern"))
    return _pass("full", params)


def _first_unrealized(part_mask: int, A, ins, outs):
    """Lex-first sign pattern over A with no realizing vertex under part_mask.

    Walks signs depth-first (-1 before +1) sharing prefix intersections; a
    dead prefix's lex-first completion pads with -1.
    """
    s = len(A)

    def rec(mask: int, depth: int, prefix: tuple):
        if depth == s:
            return None
        u = A[depth]
        for sign in (-1, 1):
            m2 = mask & (outs[u] if sign == -1 else ins[u])
            p2 = prefix + (sign,)
            if m2 == 0:
                return p2 + (-1,) * (s - depth - 1)
            hit = rec(m2, depth + 1, p2)
            if hit is not None:
                return hit
        return None

    return rec(part_mask, 0, ())


def count_realizers(K: "FullKPartite", part: int, A, a) -> int:
    """|{v in P_part : F(A, v, K) = a}| — used to re-verify witnesses."""
    outs = K.out_masks()
    ins = K.in_masks()
    m = ((1 << K.N) - 1) << (part * K.N)
    for u, s in zip(A, a):
        m &= ins[u] if s == 1 else outs[u]
    return m.bit_count()
