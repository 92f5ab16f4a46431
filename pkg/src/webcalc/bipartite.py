"""Bipartite conversion of webs, König duality and Hall matchability."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import Vertex, Warp, Web, WebError, make_web, ordered, ordered_edges

__all__ = [
    "BipartiteGraph",
    "Conversion",
    "LambdaGraph",
    "to_bipartite",
    "warp_to_matching",
    "lambda_graph",
    "matching_to_web",
    "KonigResult",
    "konig",
    "HallResult",
    "hall_check",
    "bipartite_web",
]


@dataclass(frozen=True)
class BipartiteGraph:
    M: frozenset
    W: frozenset
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "M", frozenset(self.M))
        object.__setattr__(self, "W", frozenset(self.W))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        if self.M & self.W:
            raise WebError(f"sides overlap on {ordered(self.M & self.W)}")
        for m, x in self.edges:
            if m not in self.M or x not in self.W:
                raise WebError(f"edge ({m!r}, {x!r}) does not run from M to W")

    def neighbours(self, S: Iterable[Vertex]) -> frozenset:
        S = set(S)
        return frozenset(x for m, x in self.edges if m in S)


def m_(v: Vertex) -> tuple:
    return ("m", v)


def w_(v: Vertex) -> tuple:
    return ("w", v)


@dataclass(frozen=True)
class Conversion:
    """``Δ(Γ)`` with the copy maps ``m`` (out-side) and ``w`` (in-side)."""

    delta: BipartiteGraph
    m_map: Mapping = field(compare=False)
    w_map: Mapping = field(compare=False)


def to_bipartite(web: Web) -> Conversion:
    """Two copies per vertex: ``m(v)`` for ``v ∉ B``, ``w(v)`` for ``v ∉ A``."""
    m_map = {v: m_(v) for v in web.vertices - web.B}
    w_map = {v: w_(v) for v in web.vertices - web.A}
    edges = {(m_map[x], w_map[y]) for x, y in web.edges}
    edges |= {(m_map[x], w_map[x]) for x in web.vertices - web.A - web.B}
    delta = BipartiteGraph(frozenset(m_map.values()), frozenset(w_map.values()), frozenset(edges))
    return Conversion(delta, m_map, w_map)


def warp_to_matching(web: Web, y: Warp) -> frozenset:
    """``J(Y)``: warp edges plus identity edges of vertices no warp edge touches."""
    touched = {v for e in y.edges for v in e}
    J = {(m_(u), w_(v)) for u, v in y.edges}
    J |= {(m_(u), w_(u)) for u in web.vertices - web.A - web.B if u not in touched}
    return frozenset(J)


def _check_matching(d: BipartiteGraph, J: Iterable[tuple]) -> frozenset:
    J = frozenset(tuple(e) for e in J)
    if not J <= d.edges:
        raise WebError("matching uses edges outside the graph")
    left = [m for m, _ in J]
    right = [x for _, x in J]
    if len(set(left)) != len(left) or len(set(right)) != len(right):
        raise WebError("J is not a matching")
    return J


@dataclass(frozen=True)
class LambdaGraph:
    """Contraction of a matching: each matched pair becomes ``("v", m, w)``."""

    vertices: frozenset
    succ: Mapping = field(compare=False)
    sources: frozenset  # unmatched left vertices
    sinks: frozenset  # unmatched right vertices
    left: Mapping = field(compare=False)  # Λ vertex -> its M-side vertex (or None)
    right: Mapping = field(compare=False)  # Λ vertex -> its W-side vertex (or None)

    @property
    def edges(self) -> frozenset:
        return frozenset((p, q) for p, qs in self.succ.items() for q in qs)


def lambda_graph(d: BipartiteGraph, J: Iterable[tuple]) -> LambdaGraph:
    J = _check_matching(d, J)
    matched_m = {m for m, _ in J}
    matched_w = {x for _, x in J}
    left: dict = {}
    right: dict = {}
    by_left: dict = {}
    by_right: dict = {}
    for m, x in J:
        v = ("v", m, x)
        left[v], right[v] = m, x
    for m in d.M - matched_m:
        left[m], right[m] = m, None
    for x in d.W - matched_w:
        left[x], right[x] = None, x
    for v in left:
        if left[v] is not None:
            by_left[left[v]] = v
        if right[v] is not None:
            by_right[right[v]] = v
    succ: dict = {v: [] for v in left}
    for m, x in d.edges:
        p, q = by_left[m], by_right[x]
        if p != q:
            succ[p].append(q)
    succ = {v: tuple(ordered(ns)) for v, ns in succ.items()}
    return LambdaGraph(
        frozenset(left),
        succ,
        frozenset(d.M - matched_m),
        frozenset(d.W - matched_w),
        left,
        right,
    )


def matching_to_web(d: BipartiteGraph, J: Iterable[tuple], *, trim: bool = True) -> Web:
    """``Λ(J)`` as a web with sources the unmatched left and sinks the unmatched right."""
    lam = lambda_graph(d, J)
    return make_web(ordered(lam.vertices), ordered_edges(lam.edges), lam.sources, lam.sinks, trim=trim)


# ------------------------------------------------------------ König / Hall


def bipartite_web(d: BipartiteGraph) -> Web:
    """The graph as a web from ``M`` to ``W``; isolated left vertices stay sources."""
    return make_web(ordered(d.M | d.W), ordered_edges(d.edges), d.M, d.W, trim=False)


@dataclass(frozen=True)
class KonigResult:
    matching: frozenset
    cover: frozenset
    pairing: Mapping = field(compare=False)  # matching edge -> its cover vertex


def konig(d: BipartiteGraph) -> KonigResult:
    """Maximum matching and minimum cover, one cover vertex on each matching edge.

    The matching is a maximum warp of the web view; the cover is its
    blocking set.
    """
    from .menger import menger_structure

    st = menger_structure(bipartite_web(d))
    pairing = {}
    for p in st.paths:
        if len(p) != 2:
            raise AssertionError(f"bipartite web produced path {p!r}")
        pairing[p] = st.choice[p]
    return KonigResult(frozenset(pairing), frozenset(st.separator), pairing)


@dataclass(frozen=True)
class HallResult:
    matchable: bool
    matching: frozenset
    deficient: frozenset | None


def hall_check(d: BipartiteGraph) -> HallResult:
    """A matching saturating ``M``, or a set ``S ⊆ M`` with ``|N(S)| < |S|``."""
    k = konig(d)
    if len(k.matching) == len(d.M):
        return HallResult(True, k.matching, None)
    # edges out of M∖C all land in C∩W, which is smaller than M∖C
    S = d.M - k.cover
    assert len(d.neighbours(S)) < len(S)
    return HallResult(False, k.matching, frozenset(S))
