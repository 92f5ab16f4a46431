"""Alternating paths relative to a warp.

An alternating path is a list of links.  Forward links are stored in the
order they are walked.  Backward links are stored in the orientation of the
warp path they come from (first vertex ``u_i``, last vertex ``w_i``) and are
walked in reverse.  A path without links is the trivial path at ``origin``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .core import (
    Cyclowarp,
    FracturedWarp,
    Path,
    Vertex,
    Warp,
    Web,
    WebError,
    decompose,
    is_path,
    ordered,
    path_edges,
)

__all__ = [
    "FORWARD",
    "BACKWARD",
    "Link",
    "AlternatingPath",
    "MalformedAlternatingPath",
    "alternating_violations",
    "validate_alternating",
    "apply_alternating",
    "safety_violations",
    "is_safe",
    "is_degenerate",
    "is_augmenting",
    "is_reducing",
    "is_leaving",
    "find_augmenting",
    "strongly_maximal_warp",
    "SapFamily",
    "SapConstructionError",
    "sap_family",
]

FORWARD = "F"
BACKWARD = "R"


class MalformedAlternatingPath(WebError):
    """The link list does not even describe a walk."""


class SapConstructionError(RuntimeError):
    """The family construction found no admissible path; signals a bug."""


@dataclass(frozen=True)
class Link:
    kind: str
    path: Path

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(self.path))

    @property
    def walk(self) -> Path:
        return self.path if self.kind == FORWARD else self.path[::-1]


def F(*vs: Vertex) -> Link:
    return Link(FORWARD, vs)


def R(*vs: Vertex) -> Link:
    """Backward link given in walking order; stored in warp orientation."""
    return Link(BACKWARD, vs[::-1])


@dataclass(frozen=True)
class AlternatingPath:
    links: tuple = ()
    origin: Vertex | None = None

    def __post_init__(self):
        object.__setattr__(self, "links", tuple(self.links))

    @classmethod
    def trivial(cls, v: Vertex) -> "AlternatingPath":
        return cls((), v)

    @classmethod
    def from_walk(cls, y: Warp, seq: Sequence[Vertex]) -> "AlternatingPath":
        """Split a vertex sequence into links: a step is backward iff it reverses a warp edge."""
        seq = tuple(seq)
        if len(seq) == 1:
            return cls.trivial(seq[0])
        links: list = []
        for p, q in zip(seq, seq[1:]):
            kind = BACKWARD if (q, p) in y.edges else FORWARD
            if links and links[-1][0] == kind:
                links[-1][1].append(q)
            else:
                links.append((kind, [p, q]))
        return cls(tuple(Link(k, tuple(vs) if k == FORWARD else tuple(vs[::-1])) for k, vs in links))

    @property
    def is_trivial(self) -> bool:
        return not self.links

    def vertices(self) -> tuple:
        """The walked vertex sequence (revisits allowed)."""
        if not self.links:
            return (self.origin,)
        out = list(self.links[0].walk)
        for link in self.links[1:]:
            out.extend(link.walk[1:])
        return tuple(out)

    @property
    def start(self) -> Vertex:
        return self.origin if not self.links else self.links[0].walk[0]

    @property
    def end(self) -> Vertex:
        return self.origin if not self.links else self.links[-1].walk[-1]

    @property
    def form(self) -> tuple[bool, bool]:
        """(starts with a forward link, ends with a forward link)."""
        if not self.links:
            return (True, True)
        return (self.links[0].kind == FORWARD, self.links[-1].kind == FORWARD)

    def forward_links(self) -> list:
        return [l.path for l in self.links if l.kind == FORWARD]

    def backward_links(self) -> list:
        return [l.path for l in self.links if l.kind == BACKWARD]

    @property
    def forward_edges(self) -> frozenset:
        return frozenset(e for p in self.forward_links() for e in path_edges(p))

    @property
    def backward_edges(self) -> frozenset:
        return frozenset(e for p in self.backward_links() for e in path_edges(p))

    def map_vertices(self, f: Mapping) -> "AlternatingPath":
        g = lambda v: f.get(v, v)
        return AlternatingPath(
            tuple(Link(l.kind, tuple(g(v) for v in l.path)) for l in self.links),
            None if self.origin is None else g(self.origin),
        )

    def __repr__(self) -> str:
        return "Alt(" + ",".join(map(str, self.vertices())) + ")"


# ----------------------------------------------------------------- indices


@dataclass
class _Indexed:
    F: dict  # i -> forward link path
    R: dict  # i -> backward link path (warp orientation)
    u: dict
    w: dict


def _structure(q: AlternatingPath) -> _Indexed:
    """Number the links and check that they form a walk; raise otherwise."""
    if not q.links:
        if q.origin is None:
            raise MalformedAlternatingPath("empty link list without an origin")
        return _Indexed({}, {}, {}, {})
    for l in q.links:
        if not isinstance(l, Link) or l.kind not in (FORWARD, BACKWARD):
            raise MalformedAlternatingPath(f"bad link {l!r}")
        if len(l.path) < 2:
            raise MalformedAlternatingPath(f"link {l.path!r} has no edge")
    for a, b in zip(q.links, q.links[1:]):
        if a.kind == b.kind:
            raise MalformedAlternatingPath("links must alternate between forward and backward")
        if a.walk[-1] != b.walk[0]:
            raise MalformedAlternatingPath(f"links {a.walk!r} and {b.walk!r} do not join")
    if q.origin is not None and q.origin != q.start:
        raise MalformedAlternatingPath("origin differs from the first vertex")
    ix = _Indexed({}, {}, {}, {})
    k = 0 if q.links[0].kind == FORWARD else 1
    for l in q.links:
        p = l.path
        if l.kind == FORWARD:
            ix.F[k] = p
            ix.u[k], ix.w[k + 1] = p[0], p[-1]
            k += 1
        else:
            ix.R[k] = p
            ix.u[k], ix.w[k] = p[0], p[-1]
    return ix


def _is_subpath(y: Warp, p: Path) -> bool:
    host = y.path_of(p[0])
    if host is None:
        return False
    i = host.index(p[0])
    return host[i:i + len(p)] == p


def alternating_violations(w: Web, y: Warp, q: AlternatingPath, *, complete: bool = True) -> list[str]:
    """Every broken condition of the alternating-path definition, as text.

    Besides the six listed conditions two points are enforced: a meeting of
    ``F_i`` and ``R_j`` at a shared junction vertex (``w_{i+1} = u_j`` or
    ``u_i = w_j``) is allowed, and an inner vertex of ``F_i`` lying on the
    warp must be an inner vertex of some ``R_j`` with ``j ≤ i``.

    ``complete=False`` checks a prefix, whose last forward link may still
    end on the warp.
    """
    ix = _structure(q)
    out: list[str] = []
    VY = y.vertices
    if not q.links:
        if q.origin not in w.vertices:
            out.append(f"origin {q.origin!r} not in web")
        elif q.origin in VY:
            out.append("trivial path starts on the warp")
        return out

    for i, p in ix.F.items():
        if not is_path(w, p):
            out.append(f"F{i}={p!r} is not a path of the web")
    for i, p in ix.R.items():
        if not _is_subpath(y, p):
            out.append(f"R{i}={p!r} is not a subpath of a warp path")
    if q.links[0].kind == FORWARD and ix.u[0] in VY:
        out.append("first vertex lies on the warp")
    if complete and q.links[-1].kind == FORWARD and q.end in VY:
        out.append("last vertex lies on the warp")

    Ri = sorted(ix.R)
    for a in range(len(Ri)):
        for b in range(a + 1, len(Ri)):
            i, j = Ri[a], Ri[b]
            for v in set(ix.R[i]) & set(ix.R[j]):
                if not (v == ix.u[i] == ix.w[j] or v == ix.w[i] == ix.u[j]):
                    out.append(f"R{i} and R{j} meet at {v!r}")
    Fi = sorted(ix.F)
    for a in range(len(Fi)):
        for b in range(a + 1, len(Fi)):
            i, j = Fi[a], Fi[b]
            for v in set(ix.F[i]) & set(ix.F[j]):
                if not (v == ix.u[i] == ix.w[j + 1] or v == ix.w[i + 1] == ix.u[j]):
                    out.append(f"F{i} and F{j} meet at {v!r}")
    for i in Fi:
        for j in Ri:
            meet = set(ix.F[i]) & set(ix.R[j])
            rest = {
                v for v in meet
                if not (v == ix.w[i + 1] == ix.u[j] or v == ix.u[i] == ix.w.get(j))
            }
            if not rest:
                continue
            if j == i + 1:
                ok = rest == {ix.w[j]}
            elif i > j:
                ok = not rest & {ix.u[i], ix.w[i + 1], ix.u[j], ix.w[j]}
            elif i == j:
                ok = ix.w[i] not in rest and ix.w[i + 1] not in rest
            else:
                ok = False
            if not ok:
                out.append(f"F{i} and R{j} meet at {ordered(rest)!r}")
    for i in Fi:
        inner_before = {v for j in Ri if j <= i for v in ix.R[j][1:-1]}
        for v in ix.F[i][1:-1]:
            if v in VY and v not in inner_before:
                out.append(f"F{i} crosses the warp at {v!r} outside earlier backward links")
    return out


def validate_alternating(w: Web, y: Warp, q: AlternatingPath) -> bool:
    return not alternating_violations(w, y, q)


def is_augmenting(w: Web, y: Warp, q: AlternatingPath) -> bool:
    free = lambda v, S: v in S and v not in y.vertices
    return q.form[0] and free(q.start, w.A) and free(q.end, w.B)


def is_reducing(y: Warp, q: AlternatingPath) -> bool:
    return bool(q.links) and q.start in y.ters and q.end in y.ins and q.form == (False, False)


def is_leaving(y: Warp, q: AlternatingPath) -> bool:
    return q.end not in y.vertices


# ------------------------------------------------------------- application


def apply_alternating(y: Warp, q: AlternatingPath, *, web: Web | None = None) -> Cyclowarp:
    """``Y△Q``: drop the backward edges, add the forward ones, keep ``ISO(Y)``.

    Passing ``web`` validates ``q`` first.
    """
    _structure(q)
    if web is not None:
        bad = alternating_violations(web, y, q)
        if bad:
            raise WebError("invalid alternating path: " + "; ".join(bad))
    for p in q.backward_links():
        if not _is_subpath(y, p):
            raise WebError(f"backward link {p!r} is not on the warp")
    edges = (y.edges - q.backward_edges) | q.forward_edges
    verts = set(y.iso)
    if q.is_trivial:
        verts.add(q.origin)
    try:
        return Cyclowarp.from_edges(verts, edges)
    except WebError as exc:
        raise WebError(f"Y△Q is not a cyclowarp: {exc}") from None


def safety_violations(y: Warp, q: AlternatingPath) -> list[str]:
    out = []
    back = q.backward_edges
    for P in y:
        idx = [k for k, e in enumerate(path_edges(P)) if e in back]
        if idx and idx[-1] - idx[0] + 1 != len(idx):
            out.append(f"uses {P!r} on more than one interval")
    new = q.forward_edges - y.edges
    if _has_cycle(new):
        out.append("new edges contain a cycle")
    return out


def _has_cycle(edges: Iterable[tuple]) -> bool:
    succ: dict = {}
    indeg: dict = {}
    for x, z in edges:
        succ.setdefault(x, []).append(z)
        indeg[z] = indeg.get(z, 0) + 1
        indeg.setdefault(x, 0)
    todo = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while todo:
        v = todo.pop()
        seen += 1
        for z in succ.get(v, ()):
            indeg[z] -= 1
            if indeg[z] == 0:
                todo.append(z)
    return seen != len(indeg)


def is_safe(y: Warp, q: AlternatingPath) -> bool:
    return not safety_violations(y, q)


def is_degenerate(y: Warp, q: AlternatingPath) -> bool:
    """Whether ``Y△Q`` has a path through ``in(Q)`` and then ``ter(Q)``."""
    u, v = q.start, q.end
    for P in apply_alternating(y, q).paths:
        if u in P and v in P and P.index(u) <= P.index(v):
            return True
    return False


# ------------------------------------------------------ augmenting search


def _check_ab_warp(w: Web, y: Warp) -> None:
    for p in y.paths:
        if not is_path(w, p) or p[0] not in w.A or p[-1] not in w.B:
            raise WebError(f"{p!r} is not an A-B path of the web")


def _reach_lambda(w: Web, y: Warp):
    from .bipartite import lambda_graph, to_bipartite, warp_to_matching

    lam = lambda_graph(to_bipartite(w).delta, warp_to_matching(w, y))
    parent: dict = {s: None for s in ordered(lam.sources)}
    todo = deque(parent)
    while todo:
        p = todo.popleft()
        for q in lam.succ[p]:
            if q not in parent:
                parent[q] = p
                todo.append(q)
    return lam, parent


def _lambda_path_to_links(lam, chain: list) -> AlternatingPath:
    """Read a Λ path back as a walk in the web and cut it into links."""
    moves: list = []  # (kind, from, to)
    pos = lam.left[chain[0]][1]
    for p, q in zip(chain, chain[1:]):
        x = lam.left[p][1]
        yv = lam.right[q][1]
        if x != yv:
            moves.append((FORWARD, x, yv))
        back = lam.left[q]
        if back is not None and back[1] != yv:
            moves.append((BACKWARD, yv, back[1]))
            pos = back[1]
        else:
            pos = yv
    links: list = []
    for kind, a, b in moves:
        if links and links[-1][0] == kind:
            links[-1][1].append(b)
        else:
            links.append((kind, [a, b]))
    del pos
    return AlternatingPath(tuple(Link(k, tuple(vs) if k == FORWARD else tuple(vs[::-1])) for k, vs in links))


def find_augmenting(w: Web, y: Warp) -> AlternatingPath | None:
    """An augmenting path for an ``A``-``B`` warp, or ``None`` if ``y`` is strongly maximal.

    The search is a breadth-first search in the contracted graph of the
    matching ``J(y)``, whose source-to-sink paths are exactly the augmenting
    paths.
    """
    _check_ab_warp(w, y)
    for a in ordered(w.A & w.B - y.vertices):
        return AlternatingPath.trivial(a)
    lam, parent = _reach_lambda(w, y)
    for t in ordered(lam.sinks):
        if t in parent:
            chain = [t]
            while parent[chain[-1]] is not None:
                chain.append(parent[chain[-1]])
            return _lambda_path_to_links(lam, chain[::-1])
    return None


def strongly_maximal_warp(w: Web) -> Warp:
    """Augment from ``<A ∩ B>`` until no augmenting path is left."""
    y = Warp.singletons(w.A & w.B)
    for _ in range(len(w.vertices) + 1):
        q = find_augmenting(w, y)
        if q is None:
            return y
        nxt = apply_alternating(y, q)
        if nxt.cycles or len(nxt.paths) != len(y) + 1:
            raise AssertionError(f"augmenting {q!r} did not add a path to {y!r}")
        y = nxt.path_part
    raise AssertionError("augmentation did not terminate")


def participating(w: Web, y: Warp) -> frozenset:
    """Vertices on some ``A``-starting alternating path (of the search's shape)."""
    lam, parent = _reach_lambda(w, y)
    out = set()
    for v in parent:
        for side in (lam.left[v], lam.right[v]):
            if side is not None:
                out.add(side[1])
    return frozenset(out)


# ------------------------------------------------------------ s.a.p. families


@dataclass(frozen=True)
class SapFamily:
    assignments: Mapping = field(compare=False)  # z -> AlternatingPath
    reducers: Mapping = field(compare=False, default_factory=dict)  # z -> path applied to Z

    def terminals(self) -> dict:
        return {z: q.end for z, q in self.assignments.items()}


def _saps_from(web: Web, z_warp: Warp, y: Warp, z: Vertex, limit: int):
    """Safe ``[Z,Y]``-alternating paths from ``z`` that end in ``ter[Z] ∖ V[Y]``.

    Forward links run along ``Z`` to the first warp vertex that is not inside
    an earlier backward link; every admissible backward length is tried.
    """
    VY = y.vertices
    targets = z_warp.ters - VY
    found: list = []
    budget = [limit]

    def forward(links: list, start: Vertex, inner: set):
        P = z_warp.path_of(start)
        if P is None or P[-1] == start:
            return
        i = P.index(start)
        j = i + 1
        while j < len(P) - 1 and not (P[j] in VY and P[j] not in inner):
            j += 1
        seg = P[i:j + 1]
        cand = links + [Link(FORWARD, seg)]
        budget[0] -= 1
        if budget[0] < 0:
            raise SapConstructionError("search budget exhausted")
        qq = AlternatingPath(tuple(cand))
        if alternating_violations(web, y, qq, complete=False) or safety_violations(y, qq):
            return
        end = seg[-1]
        if end not in VY:
            if end in targets:
                found.append(qq)
            return
        backward(cand, end, inner)

    def backward(links: list, at: Vertex, inner: set):
        Y = y.path_of(at)
        k = Y.index(at)
        for s in range(k - 1, -1, -1):
            seg = Y[s:k + 1]
            cand = links + [Link(BACKWARD, seg)]
            qq = AlternatingPath(tuple(cand))
            budget[0] -= 1
            if budget[0] < 0:
                raise SapConstructionError("search budget exhausted")
            if alternating_violations(web, y, qq) or safety_violations(y, qq):
                continue
            forward(cand, Y[s], inner | set(seg[1:-1]))

    forward([], z, set())
    return found


def _reducers_to(web: Web, z_warp: Warp, y: Warp, v: Vertex, z: Vertex, limit: int):
    """A ``(v,z)``-alternating path w.r.t. ``Z`` whose forward links run along ``Y``."""
    budget = [limit]

    def backward(links: list, at: Vertex):
        P = z_warp.path_of(at)
        if P is None:
            return None
        k = P.index(at)
        for s in range(k - 1, -1, -1):
            cand = links + [Link(BACKWARD, P[s:k + 1])]
            qq = AlternatingPath(tuple(cand))
            budget[0] -= 1
            if budget[0] < 0:
                raise SapConstructionError("search budget exhausted")
            if alternating_violations(web, z_warp, qq):
                continue
            if P[s] == z and s == 0:
                return qq
            got = forward(cand, P[s])
            if got is not None:
                return got
        return None

    def forward(links: list, at: Vertex):
        Y = y.path_of(at)
        if Y is None:
            return None
        k = Y.index(at)
        for t in range(k + 1, len(Y)):
            cand = links + [Link(FORWARD, Y[k:t + 1])]
            qq = AlternatingPath(tuple(cand))
            budget[0] -= 1
            if budget[0] < 0:
                raise SapConstructionError("search budget exhausted")
            if Y[t] not in z_warp.vertices or z_warp.path_of(Y[t])[0] == Y[t]:
                continue
            got = backward(cand, Y[t])
            if got is not None:
                return got
        return None

    return backward([], v)


def _split_fractured(web: Web, z, y: Warp):
    """Duplicate each vertex that starts one member and ends another."""
    if isinstance(z, Warp):
        return web, z, y, {}
    ends = {p[-1] for p in z.paths if len(p) > 1}
    clash = {p[0] for p in z.paths if len(p) > 1 and p[0] in ends}
    ren = {x: ("dup", x) for x in clash}
    back = {v: x for x, v in ren.items()}
    paths = [(ren[p[0]],) + p[1:] if p[0] in clash and len(p) > 1 else p for p in z.paths]
    ypaths = [(ren[p[0]],) + p[1:] if p[0] in clash else p for p in y.paths]
    verts = web.vertices | frozenset(ren.values())
    edges = set(web.edges) | {(ren[x], s) for x in clash for s in web.succ(x)}
    aux = Web(frozenset(verts), frozenset(edges), frozenset(), frozenset())
    return aux, Warp(frozenset(paths)), Warp(frozenset(ypaths)), back


def sap_family(web: Web, z: Warp | FracturedWarp, y: Warp, *, limit: int = 200_000) -> SapFamily:
    """A ``z``-starting ``Y``-leaving maximal safe path for each ``z ∈ in[Z] ∖ in[Y]``.

    Requires ``in[Y] ⊆ in[Z]``, starts off ``V[Y]``, and every terminal of
    ``Z`` on ``Y`` to be a terminal of ``Y`` (true when both warps end in ``B``).

    The chosen paths end at distinct terminals of ``Z``.  After each choice
    ``Z`` is replaced by the path part of ``Z△T`` for the returning path
    ``T``, which removes both the start and the used terminal.
    """
    host, zk, yy, back = _split_fractured(web, z, y)
    if not yy.ins <= zk.ins:
        raise WebError("sap_family requires in[Z] ⊇ in[Y]")
    starts = ordered(zk.ins - yy.ins)
    bad = [s for s in starts if s in yy.vertices]
    if bad:
        raise WebError(f"starting vertices {bad!r} lie inside warp paths")
    # a terminal of Z sitting before the end of a Y path can trap every search
    stuck = ordered((zk.ters & yy.vertices) - yy.ters)
    if stuck:
        raise WebError(f"terminals {[back.get(v, v) for v in stuck]!r} of Z lie strictly inside paths of Y")
    out: dict = {}
    reducers: dict = {}
    for s in starts:
        if s not in zk.ins:
            raise SapConstructionError(f"{s!r} vanished from in[Z]")
        if zk.path_of(s) == (s,):
            # a one-vertex Z path off the warp is its own safe path and returning path
            out[back.get(s, s)] = reducers[back.get(s, s)] = AlternatingPath.trivial(back.get(s, s))
            zk = Warp(zk.paths - {(s,)})
            continue
        chosen = None
        for q in _saps_from(host, zk, yy, s, limit):
            t = _reducers_to(host, zk, yy, q.end, s, limit)
            if t is not None:
                chosen = (q, t)
                break
        if chosen is None:
            raise SapConstructionError(f"no safe path with a returning path from {s!r}")
        q, t = chosen
        out[back.get(s, s)] = q.map_vertices(back)
        reducers[back.get(s, s)] = t.map_vertices(back)
        zk = apply_alternating(zk, t).path_part
    return SapFamily(out, reducers)
