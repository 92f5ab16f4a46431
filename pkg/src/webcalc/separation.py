"""Separation, roofing, deletion and quotients of webs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Vertex, Web, WebError, make_web, ordered

__all__ = [
    "RoofReport",
    "is_separating",
    "roof",
    "rf",
    "rf_circle",
    "essential",
    "delete_web",
    "quotient_web",
    "induced_roofed",
    "brute_sigma",
]


@dataclass(frozen=True)
class RoofReport:
    S: frozenset
    RF: frozenset
    RF_circle: frozenset
    essential: frozenset
    inessential: frozenset


def is_separating(w: Web, S: Iterable[Vertex], X: Iterable[Vertex], Y: Iterable[Vertex]) -> bool:
    """Whether every ``X``-``Y`` path of ``w`` meets ``S``."""
    S, X, Y = frozenset(S), frozenset(X), frozenset(Y)
    if not (X & Y) <= S:
        return False
    seen = set(X - S)
    stack = list(seen)
    while stack:
        v = stack.pop()
        if v in Y:
            return False
        for u in w.succ(v):
            if u not in seen and u not in S:
                seen.add(u)
                stack.append(u)
    return True


def _reach_b_avoiding(w: Web, S: frozenset) -> set:
    """Vertices outside ``S`` with a path to ``B`` that avoids ``S``."""
    seen = set(w.B - S)
    stack = list(seen)
    while stack:
        v = stack.pop()
        for u in w.pred(v):
            if u not in seen and u not in S:
                seen.add(u)
                stack.append(u)
    return seen


def roof(w: Web, S: Iterable[Vertex]) -> RoofReport:
    """Roofed set ``RF(S)`` with the essential/inessential split of ``S``.

    One backward sweep from ``B`` in ``D - S`` decides both: ``v ∉ S`` is
    roofed iff the sweep misses it, and ``s ∈ S`` is essential iff ``s ∈ B``
    or some out-neighbour of ``s`` was reached.
    """
    S = frozenset(S)
    unknown = S - w.vertices
    if unknown:
        raise WebError(f"roof: unknown vertices {ordered(unknown)}")
    free = _reach_b_avoiding(w, S)
    RF = frozenset(w.vertices - free)
    ess = frozenset(s for s in S if s in w.B or any(x in free for x in w.succ(s)))
    return RoofReport(S, RF, RF - ess, ess, S - ess)


def rf(w: Web, S: Iterable[Vertex]) -> frozenset:
    return roof(w, S).RF


def rf_circle(w: Web, S: Iterable[Vertex]) -> frozenset:
    return roof(w, S).RF_circle


def essential(w: Web, S: Iterable[Vertex]) -> frozenset:
    """``E(S)``: members of ``S`` not separated from ``B`` by the rest of ``S``."""
    return roof(w, S).essential


def delete_web(w: Web, X: Iterable[Vertex], *, trim: bool = True) -> Web:
    """``Γ - X``.  With ``trim=False`` sources that lose every route stay put."""
    X = frozenset(X)
    keep = w.vertices - X
    return make_web(
        ordered(keep),
        [e for e in w.edges if e[0] in keep and e[1] in keep],
        w.A - X,
        w.B - X,
        trim=trim,
    )


def quotient_web(w: Web, X: Iterable[Vertex], *, allow_sources: bool = False) -> Web:
    """``Γ/X``: cut the edges into ``X``, drop ``RF°(X)``, promote ``E(A ∪ X)``.

    ``X`` must avoid ``A`` unless ``allow_sources`` is set; the latter is what
    quotients over the terminal set of a wave need.
    """
    X = frozenset(X)
    if not allow_sources and X & w.A:
        raise WebError(f"quotient requires X ⊆ V∖A; offending {ordered(X & w.A)}")
    drop = roof(w, X).RF_circle
    keep = w.vertices - drop
    edges = frozenset(
        (a, b) for a, b in w.edges if a in keep and b in keep and b not in X
    )
    A = essential(w, w.A | X)
    return Web(keep, edges, A, w.B)


def induced_roofed(w: Web, S: Iterable[Vertex]) -> Web:
    """``Γ[S]`` for a roofed set ``S = RF(S)``: ``(D[S], S ∩ A, E(S))``."""
    S = frozenset(S)
    rep = roof(w, S)
    if rep.RF != S:
        raise WebError("induced_roofed requires RF(S) = S")
    edges = frozenset(e for e in w.edges if e[0] in S and e[1] in S and e[0] not in rep.essential)
    return Web(S, edges, S & w.A, rep.essential)


def brute_sigma(w: Web, X=None, Y=None, *, bound: int | None = None) -> int:
    """Minimum size of an ``X``-``Y`` separating set, by subset enumeration."""
    from .oracle import brute_sigma as _brute

    return _brute(w, X, Y, bound=bound)
