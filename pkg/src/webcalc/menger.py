"""Menger structures, linkages and hindrance detection on finite webs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .alternating import participating, strongly_maximal_warp
from .core import Path, Vertex, Warp, Web, WebError, is_path, ordered, upto
from .separation import delete_web, is_separating

__all__ = [
    "MengerStructure",
    "blocking_vertex",
    "menger_structure",
    "menger_certificate_check",
    "certificate_problems",
    "linkage",
    "is_hindered",
    "hindrance_witness",
    "safe_link",
]


@dataclass(frozen=True)
class MengerStructure:
    """Disjoint ``A``-``B`` paths with one chosen separator vertex on each."""

    paths: Warp
    separator: frozenset
    choice: Mapping = field(compare=False)  # path -> vertex on it

    @property
    def nu(self) -> int:
        return len(self.paths)


def blocking_vertex(p: Path, reached: frozenset) -> Vertex:
    """``bl(P)``: the last vertex of ``P`` on an ``A``-starting alternating path, else ``in(P)``."""
    for v in reversed(p):
        if v in reached:
            return v
    return p[0]


def menger_structure(w: Web) -> MengerStructure:
    y = strongly_maximal_warp(w)
    reached = participating(w, y)
    choice = {p: blocking_vertex(p, reached) for p in y}
    return MengerStructure(y, frozenset(choice.values()), choice)


def certificate_problems(w: Web, s: MengerStructure) -> list[str]:
    out = []
    for p in s.paths:
        if not is_path(w, p):
            out.append(f"{p!r} is not a path of the web")
        elif p[0] not in w.A or p[-1] not in w.B:
            out.append(f"{p!r} does not run from A to B")
    if set(s.choice) != set(s.paths.paths):
        out.append("choice is not defined on exactly the paths")
    chosen = list(s.choice.values())
    if len(set(chosen)) != len(chosen):
        out.append("two paths share a chosen vertex")
    for p, v in s.choice.items():
        if v not in p:
            out.append(f"chosen vertex {v!r} is not on {p!r}")
    if frozenset(chosen) != s.separator:
        out.append("separator differs from the chosen vertices")
    if len(s.separator) != len(s.paths):
        out.append("separator and path counts differ")
    if not is_separating(w, s.separator, w.A, w.B):
        out.append("separator does not separate A from B")
    return out


def menger_certificate_check(w: Web, s: MengerStructure) -> bool:
    try:
        return not certificate_problems(w, s)
    except (WebError, TypeError, KeyError):
        return False


def linkage(w: Web) -> Warp | None:
    """A warp linking all of ``A`` to ``B``, or ``None``."""
    y = strongly_maximal_warp(w)
    return y if len(y) == len(w.A) else None


def is_hindered(w: Web) -> bool:
    return linkage(w) is None


def hindrance_witness(w: Web) -> Warp | None:
    """The wave ``{P bl(P)}`` when it misses part of ``A``; ``None`` for linkable webs."""
    s = menger_structure(w)
    if len(s.paths) == len(w.A):
        return None
    return Warp(frozenset(upto(p, s.choice[p]) for p in s.paths))


def safe_link(w: Web, a: Vertex) -> Path:
    """An ``a``-``B`` path whose removal leaves the rest of ``A`` linkable."""
    if a not in w.A:
        raise WebError(f"{a!r} is not a source")
    L = linkage(w)
    if L is None:
        raise WebError("web is hindered")
    p = L.path_of(a)
    rest = delete_web(w, p, trim=False)
    if is_hindered(rest):
        raise AssertionError(f"residue after {p!r} is hindered")
    return p
