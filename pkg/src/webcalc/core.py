"""Webs, paths and warps on finite digraphs.

A path is a plain tuple of vertex ids.  Warps, fractured warps and
cyclowarps are small frozen containers of such tuples.  Everything here is
immutable; iteration orders are canonical so that results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

Vertex = Hashable
Path = tuple
Edge = tuple


class WebError(ValueError):
    """Malformed web, path or warp input."""


def vkey(v: Vertex):
    # str ids sort before tagged tuple ids (bipartite conversion)
    if isinstance(v, str):
        return (0, v)
    return (1, repr(v))


def ordered(vertices: Iterable[Vertex]) -> list:
    return sorted(vertices, key=vkey)


def ordered_edges(edges: Iterable[Edge]) -> list:
    return sorted(edges, key=lambda e: (vkey(e[0]), vkey(e[1])))


def path_key(p: Path):
    return tuple(vkey(v) for v in p)


# --------------------------------------------------------------------- webs


@dataclass(frozen=True)
class Web:
    """A digraph with sources ``A`` and sinks ``B``.

    Use :func:`make_web` to build one from raw input; the constructor only
    checks structure.
    """

    vertices: frozenset
    edges: frozenset
    A: frozenset
    B: frozenset
    repairs: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        for x, y in self.edges:
            if x not in self.vertices or y not in self.vertices:
                raise WebError(f"edge ({x!r}, {y!r}) references an unknown vertex")
            if x == y:
                raise WebError(f"self-loop at {x!r}")
            if y in self.A:
                raise WebError(f"edge ({x!r}, {y!r}) enters A")
            if x in self.B:
                raise WebError(f"edge ({x!r}, {y!r}) leaves B")
        if not self.A <= self.vertices or not self.B <= self.vertices:
            raise WebError("A and B must be subsets of the vertex set")

    @cached_property
    def _succ(self) -> Mapping[Vertex, tuple]:
        out: dict = {v: [] for v in self.vertices}
        for x, y in self.edges:
            out[x].append(y)
        return {v: tuple(ordered(ns)) for v, ns in out.items()}

    @cached_property
    def _pred(self) -> Mapping[Vertex, tuple]:
        inn: dict = {v: [] for v in self.vertices}
        for x, y in self.edges:
            inn[y].append(x)
        return {v: tuple(ordered(ns)) for v, ns in inn.items()}

    def succ(self, v: Vertex) -> tuple:
        return self._succ[v]

    def pred(self, v: Vertex) -> tuple:
        return self._pred[v]

    @cached_property
    def order(self) -> list:
        return ordered(self.vertices)

    def is_trimmed(self) -> bool:
        return self.A == _reaching(self, self.B, self.A)

    def __repr__(self) -> str:
        return (
            f"Web(V={self.order}, E={ordered_edges(self.edges)}, "
            f"A={ordered(self.A)}, B={ordered(self.B)})"
        )


def _reaching(w: Web, targets: Iterable[Vertex], among: Iterable[Vertex]) -> frozenset:
    """Members of ``among`` from which some vertex of ``targets`` is reachable."""
    seen = set(targets)
    stack = list(seen)
    while stack:
        v = stack.pop()
        for u in w.pred(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(a for a in among if a in seen)


def make_web(
    vertices: Iterable[Vertex],
    edges: Iterable[Sequence[Vertex]],
    A: Iterable[Vertex],
    B: Iterable[Vertex],
    *,
    strict: bool = False,
    trim: bool = True,
) -> Web:
    """Build a :class:`Web`, repairing what the web conventions forbid.

    Self-loops, duplicate edges, edges into ``A`` and edges out of ``B`` are
    dropped and ``A`` is pruned to the vertices that reach ``B``.  Every repair
    is listed in ``web.repairs``; with ``strict=True`` any repair raises.
    """
    vlist = list(vertices)
    vset = frozenset(vlist)
    if len(vset) != len(vlist):
        raise WebError("duplicate vertex ids")
    A, B = frozenset(A), frozenset(B)
    unknown = (A | B) - vset
    if unknown:
        raise WebError(f"A/B mention unknown vertices {ordered(unknown)}")

    repairs: list[str] = []
    kept = set()
    for e in edges:
        if len(e) != 2:
            raise WebError(f"edge {e!r} is not a pair")
        x, y = e
        if x not in vset or y not in vset:
            raise WebError(f"edge ({x!r}, {y!r}) references an unknown vertex")
        if (x, y) in kept:
            repairs.append(f"duplicate edge ({x}, {y}) collapsed")
        elif x == y:
            repairs.append(f"self-loop ({x}, {y}) removed")
        elif y in A:
            repairs.append(f"edge ({x}, {y}) into A removed")
        elif x in B:
            repairs.append(f"edge ({x}, {y}) out of B removed")
        else:
            kept.add((x, y))

    web = Web(vset, frozenset(kept), A, B)
    if trim:
        reach = _reaching(web, B, A)
        for a in ordered(A - reach):
            repairs.append(f"source {a} pruned (no path to B)")
        web = Web(vset, web.edges, reach, B)
    if strict and repairs:
        raise WebError("; ".join(repairs))
    return Web(web.vertices, web.edges, web.A, web.B, tuple(repairs))


def reverse_web(w: Web, *, trim: bool = True) -> Web:
    """The web with every edge reversed and the roles of A and B swapped."""
    return make_web(w.order, [(y, x) for x, y in w.edges], w.B, w.A, trim=trim)


def subweb(w: Web, keep: Iterable[Vertex], A=None, B=None) -> Web:
    """Induced sub-web on ``keep``; sources and sinks default to restrictions."""
    keep = frozenset(keep)
    edges = frozenset(e for e in w.edges if e[0] in keep and e[1] in keep)
    A = w.A & keep if A is None else frozenset(A)
    B = w.B & keep if B is None else frozenset(B)
    return Web(keep, edges, A, B)


# -------------------------------------------------------------------- paths


def path_edges(p: Path) -> list:
    return list(zip(p, p[1:]))


def is_simple(p: Sequence) -> bool:
    return len(p) > 0 and len(set(p)) == len(p)


def is_path(w: Web, p: Sequence) -> bool:
    """Nonempty, simple, and every consecutive pair is an edge of ``w``."""
    return (
        is_simple(p)
        and all(v in w.vertices for v in p)
        and all(e in w.edges for e in path_edges(tuple(p)))
    )


def upto(p: Path, v: Vertex) -> Path:
    """``Pv``: the part of ``p`` up to and including ``v``."""
    return p[: p.index(v) + 1]


def from_(p: Path, v: Vertex) -> Path:
    """``vP``: the part of ``p`` from ``v`` on."""
    return p[p.index(v):]


def interior(p: Path) -> Path:
    return p[1:-1]


def concat(p: Path, q: Path, *, exact: bool = False) -> Path:
    """``p*q`` for ``ter(p) == in(q)``.

    When the two paths meet anywhere other than the junction the walk is
    shortcut at its first revisited vertex, which leaves a simple path from
    ``in(p)`` to ``ter(q)``.  ``exact=True`` raises instead.
    """
    if not p or not q or p[-1] != q[0]:
        raise WebError(f"cannot concatenate {p!r} and {q!r}: junction mismatch")
    walk = tuple(p) + tuple(q[1:])
    if is_simple(walk):
        return walk
    if exact:
        raise WebError(f"{p!r} and {q!r} meet away from the junction")
    return shortcut(walk)


def shortcut(walk: Sequence) -> Path:
    """A simple path inside ``walk`` with the same ends."""
    out: list = []
    pos: dict = {}
    for v in walk:
        if v in pos:
            cut = pos[v]
            for u in out[cut + 1:]:
                del pos[u]
            del out[cut + 1:]
        else:
            pos[v] = len(out)
            out.append(v)
    return tuple(out)


def reverse_path(p: Path) -> Path:
    return tuple(reversed(p))


# -------------------------------------------------------------------- warps


def decompose(vertices: Iterable[Vertex], edges: Iterable[Edge]) -> tuple[list, list]:
    """Split a graph of in- and out-degree at most one into paths and cycles.

    Every vertex in ``vertices`` that carries no edge becomes a singleton path.
    """
    edges = set(edges)
    nxt: dict = {}
    prv: dict = {}
    for x, y in edges:
        if x in nxt or y in prv:
            raise WebError(f"edge ({x!r}, {y!r}) gives a vertex degree above one")
        nxt[x] = y
        prv[y] = x
    verts = set(vertices) | set(nxt) | set(prv)
    paths, cycles, seen = [], [], set()
    for v in ordered(verts):
        if v in seen or v in prv:
            continue
        p = [v]
        seen.add(v)
        while p[-1] in nxt:
            p.append(nxt[p[-1]])
            seen.add(p[-1])
        paths.append(tuple(p))
    for v in ordered(verts):
        if v in seen:
            continue
        c = [v]
        seen.add(v)
        while nxt[c[-1]] != v:
            c.append(nxt[c[-1]])
            seen.add(c[-1])
        cycles.append(tuple(c))
    return paths, cycles


def _vertex_union(paths) -> frozenset:
    return frozenset(v for p in paths for v in p)


def _edge_union(paths) -> frozenset:
    return frozenset(e for p in paths for e in path_edges(p))


@dataclass(frozen=True)
class Warp:
    """A set of pairwise vertex-disjoint paths."""

    paths: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "paths", frozenset(tuple(p) for p in self.paths))
        seen: set = set()
        for p in self.paths:
            if not is_simple(p):
                raise WebError(f"{p!r} is not a simple nonempty path")
            if seen & set(p):
                raise WebError(f"paths of a warp must be disjoint; {p!r} overlaps")
            seen |= set(p)

    @classmethod
    def of(cls, *paths: Sequence) -> "Warp":
        return cls(frozenset(tuple(p) for p in paths))

    @classmethod
    def singletons(cls, X: Iterable[Vertex]) -> "Warp":
        """``<X>``: every vertex of ``X`` as a trivial path."""
        return cls(frozenset((x,) for x in X))

    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], edges: Iterable[Edge]) -> "Warp":
        paths, cycles = decompose(vertices, edges)
        if cycles:
            raise WebError(f"edge set contains cycles {cycles}")
        return cls(frozenset(paths))

    def __iter__(self) -> Iterator[Path]:
        return iter(sorted(self.paths, key=path_key))

    def __len__(self) -> int:
        return len(self.paths)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.paths

    @cached_property
    def vertices(self) -> frozenset:
        return _vertex_union(self.paths)

    @cached_property
    def edges(self) -> frozenset:
        return _edge_union(self.paths)

    @cached_property
    def ins(self) -> frozenset:
        return frozenset(p[0] for p in self.paths)

    @cached_property
    def ters(self) -> frozenset:
        return frozenset(p[-1] for p in self.paths)

    @cached_property
    def iso(self) -> frozenset:
        return frozenset(p[0] for p in self.paths if len(p) == 1)

    @cached_property
    def _owner(self) -> dict:
        return {v: p for p in self.paths for v in p}

    def path_of(self, v: Vertex) -> Path | None:
        """``W(x)``: the member path through ``v``, if any."""
        return self._owner.get(v)

    def meeting(self, X: Iterable[Vertex]) -> "Warp":
        """``W<X>``: members that intersect ``X``."""
        X = set(X)
        return Warp(frozenset(p for p in self.paths if X.intersection(p)))

    def avoiding(self, X: Iterable[Vertex]) -> "Warp":
        X = set(X)
        return Warp(frozenset(p for p in self.paths if not X.intersection(p)))

    def ground(self, A: Iterable[Vertex]) -> "Warp":
        """``W_G``: members meeting the source set."""
        return self.meeting(A)

    def hanging(self, A: Iterable[Vertex]) -> "Warp":
        """``W_H``: members not meeting the source set."""
        return self.avoiding(A)

    def is_in(self, w: Web) -> bool:
        return all(is_path(w, p) for p in self.paths)

    def is_linkage(self, w: Web) -> bool:
        """An A-B warp whose initial vertices are exactly A."""
        return (
            self.is_in(w)
            and self.ins == w.A
            and all(p[-1] in w.B and not (w.A | w.B).intersection(p[1:-1]) for p in self.paths)
        )

    def __repr__(self) -> str:
        return "Warp(" + ", ".join("(" + ",".join(map(str, p)) + ")" for p in self) + ")"


@dataclass(frozen=True)
class FracturedWarp:
    """Paths whose edge set is that of a warp and which meet only end-to-start."""

    paths: frozenset

    def __post_init__(self):
        paths = frozenset(tuple(p) for p in self.paths)
        object.__setattr__(self, "paths", paths)
        for p in paths:
            if not is_simple(p):
                raise WebError(f"{p!r} is not a simple nonempty path")
        plist = sorted(paths, key=path_key)
        for i, p in enumerate(plist):
            for q in plist[i + 1:]:
                common = set(p) & set(q)
                if not common:
                    continue
                if len(p) == 1 or len(q) == 1 or len(common) != 1:
                    raise WebError(f"{p!r} and {q!r} meet illegally")
                (v,) = common
                if not ((p[0] == v == q[-1]) or (q[0] == v == p[-1])):
                    raise WebError(f"{p!r} and {q!r} meet away from their ends")
        decompose((), _edge_union(paths))

    def __iter__(self) -> Iterator[Path]:
        return iter(sorted(self.paths, key=path_key))

    def __len__(self) -> int:
        return len(self.paths)

    @cached_property
    def vertices(self) -> frozenset:
        return _vertex_union(self.paths)

    @cached_property
    def edges(self) -> frozenset:
        return _edge_union(self.paths)

    @cached_property
    def ins(self) -> frozenset:
        return frozenset(p[0] for p in self.paths)

    @cached_property
    def ters(self) -> frozenset:
        return frozenset(p[-1] for p in self.paths)


@dataclass(frozen=True)
class Cyclowarp:
    """Pairwise disjoint paths and directed cycles."""

    paths: frozenset
    cycles: frozenset = frozenset()

    def __post_init__(self):
        Warp(frozenset(self.paths) | frozenset(self.cycles))

    @property
    def path_part(self) -> Warp:
        return Warp(self.paths)

    @cached_property
    def edges(self) -> frozenset:
        cyc = frozenset((c[i], c[(i + 1) % len(c)]) for c in self.cycles for i in range(len(c)))
        return _edge_union(self.paths) | cyc

    @classmethod
    def from_edges(cls, vertices, edges) -> "Cyclowarp":
        paths, cycles = decompose(vertices, edges)
        return cls(frozenset(paths), frozenset(cycles))


# ------------------------------------------------------- relations on warps


def extends(u: Warp, w: Warp) -> bool:
    """``w ≼ u``: ``u`` contains the vertices and edges of ``w``."""
    return w.vertices <= u.vertices and w.edges <= u.edges


def forward_extends(u: Warp, w: Warp) -> bool:
    """``u`` is a forward extension of ``w``."""
    return extends(u, w) and u.ins == w.ins


# ------------------------------------------------------- operations on warps


def warp_restrict(w: Warp, X: Iterable[Vertex]) -> Warp:
    """``W[X]``; a member path may break into several pieces."""
    X = frozenset(X)
    edges = [e for e in w.edges if e[0] in X and e[1] in X]
    return Warp.from_edges(w.vertices & X, edges)


def warp_minus(w: Warp, X: Iterable[Vertex]) -> Warp:
    """``W - X``."""
    return warp_restrict(w, w.vertices - frozenset(X))


def warp_fracture(w: Warp, X: Iterable[Vertex]) -> FracturedWarp:
    """``W↾X``: members cut at the vertices of ``X``, minus the ``W[X]`` edges."""
    X = frozenset(X)
    pieces = []
    for p in w.paths:
        if len(p) == 1:
            if p[0] not in X:
                pieces.append(p)
            continue
        cuts = [0] + [i for i in range(1, len(p) - 1) if p[i] in X] + [len(p) - 1]
        for i, j in zip(cuts, cuts[1:]):
            piece = p[i:j + 1]
            if not set(piece) <= X:
                pieces.append(piece)
    return FracturedWarp(frozenset(pieces))


def _check_junction(u: Warp, w: Warp) -> None:
    if not (u.vertices & w.vertices) <= (u.ters & w.ins):
        raise WebError("star requires V[U] ∩ V[W] ⊆ ter[U] ∩ in[W]")


def warp_star(u: Warp, w: Warp) -> Warp:
    """``U*W``: join matching pairs, keep unmatched ``U`` paths."""
    _check_junction(u, w)
    starts = {q[0]: q for q in w.paths}
    out = []
    for p in u.paths:
        q = starts.get(p[-1])
        out.append(p + q[1:] if q is not None else p)
    return Warp(frozenset(out))


def warp_diamond(u: Warp, w: Warp) -> Warp:
    """``U⋄W``: like ``U*W`` but also keeping the unmatched ``W`` paths."""
    _check_junction(u, w)
    return Warp.from_edges(u.vertices | w.vertices, u.edges | w.edges)


def warp_arrow(u: Warp, w: Warp) -> Warp:
    """``U↷W``: carry each ``U`` path along ``W`` where nothing of ``U`` blocks."""
    out = []
    for p in u.paths:
        t = p[-1]
        q = w.path_of(t)
        if q is not None:
            tail = from_(q, t)
            if not u.vertices.intersection(tail[1:]):
                out.append(p + tail[1:])
                continue
        out.append(p)
    return Warp(frozenset(out))


def warp_uparrow(seq: Sequence[Warp]) -> Warp:
    """Left fold of :func:`warp_arrow` over a finite sequence."""
    if not seq:
        raise WebError("uparrow of an empty sequence")
    acc = seq[0]
    for nxt in seq[1:]:
        acc = warp_arrow(acc, nxt)
    return acc


def warp_lim(seq: Sequence[Warp]) -> Warp:
    """Liminf of a finite sequence of warps (vertex- and edge-wise)."""
    if not seq:
        raise WebError("limit of an empty sequence")
    V: set = set()
    E: set = set()
    for beta in range(len(seq)):
        tail = seq[beta:]
        V |= frozenset.intersection(*(s.vertices for s in tail))
        E |= frozenset.intersection(*(s.edges for s in tail))
    return Warp.from_edges(V, E)


def warp_quotient(w: Warp, X: Iterable[Vertex], host: Web) -> Warp:
    """``W/X``: drop what ``X`` strictly roofs, keep ``X``'s essential part."""
    from .separation import roof

    rep = roof(host, X)
    V = (w.vertices | rep.S) - rep.RF_circle
    E = [(a, b) for a, b in w.edges if a not in rep.RF_circle and b not in rep.RF]
    return Warp.from_edges(V, E)
