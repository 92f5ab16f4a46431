"""Waves, hindrances, looseness and maximal waves."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Warp, Web, WebError, reverse_path, reverse_web, upto, warp_arrow, warp_star
from .menger import menger_structure
from .separation import essential, is_separating, quotient_web, rf

__all__ = [
    "Wave",
    "WaveOrderWitness",
    "is_wave",
    "is_hindrance",
    "trivial_wave",
    "trim_wave",
    "wave_arrow",
    "wave_star",
    "blocking_wave",
    "maximal_wave",
    "is_loose",
    "compare_waves",
]


def is_wave(w: Web, y: Warp) -> bool:
    """``A``-starting warp of ``w`` whose terminals separate ``A`` from ``B``."""
    return y.ins <= w.A and y.is_in(w) and is_separating(w, y.ters, w.A, w.B)


def is_hindrance(w: Web, y: Warp) -> bool:
    return is_wave(w, y) and y.ins != w.A


@dataclass(frozen=True)
class Wave:
    warp: Warp
    host: Web

    def __post_init__(self):
        if not is_wave(self.host, self.warp):
            raise WebError(f"{self.warp!r} is not a wave")

    @property
    def ters(self) -> frozenset:
        return self.warp.ters

    @property
    def roof(self) -> frozenset:
        return rf(self.host, self.warp.ters)

    def is_trivial(self) -> bool:
        return self.warp == Warp.singletons(self.host.A)


def trivial_wave(w: Web) -> Wave:
    return Wave(Warp.singletons(w.A), w)


def trim_wave(v: Wave) -> Wave:
    """``E(W)``: the member paths ending at essential terminals."""
    ess = essential(v.host, v.warp.ters)
    return Wave(Warp(frozenset(p for p in v.warp.paths if p[-1] in ess)), v.host)


def wave_arrow(u: Wave, v: Wave) -> Wave:
    if u.host != v.host:
        raise WebError("waves live in different webs")
    return Wave(warp_arrow(u.warp, v.warp), u.host)


def wave_star(u: Wave, v: Wave) -> Wave:
    """Continue ``u`` by a wave ``v`` of the quotient over ``ter[E(u)]``."""
    q = quotient_web(u.host, trim_wave(u).ters, allow_sources=True)
    if v.host != q:
        raise WebError("second wave must live in the quotient over the first")
    return Wave(warp_star(u.warp, v.warp), u.host)


def blocking_wave(w: Web) -> Wave:
    """``{P s_P}`` for a Menger structure of the reversed web.

    Its separator is the minimum separator closest to ``B``, so the wave has
    the largest roof of all waves.
    """
    st = menger_structure(reverse_web(w, trim=False))
    paths = []
    for p in st.paths:
        fwd = reverse_path(p)
        paths.append(upto(fwd, st.choice[p]))
    return Wave(Warp(frozenset(paths)), w)


def maximal_wave(w: Web) -> Wave:
    """Compose blocking waves of successive quotients until only the trivial one remains."""
    cur = trivial_wave(w)
    for _ in range(len(w.vertices) + 1):
        q = quotient_web(w, trim_wave(cur).ters, allow_sources=True)
        nxt = blocking_wave(q)
        if nxt.is_trivial():
            return cur
        before = cur.roof
        cur = wave_star(cur, nxt)
        if not before < cur.roof:
            raise AssertionError("wave composition did not enlarge the roof")
    raise AssertionError("maximal wave loop did not terminate")


def is_loose(w: Web) -> bool:
    """No nontrivial wave: the trimmed maximal wave is ``<A>``."""
    return trim_wave(maximal_wave(w)).warp == Warp.singletons(w.A)


@dataclass(frozen=True)
class WaveOrderWitness:
    relation: str  # "equiv", "lt", "gt" or "incomparable" (left against right)
    rf_left: frozenset
    rf_right: frozenset


def compare_waves(u: Wave, v: Wave) -> WaveOrderWitness:
    if u.host != v.host:
        raise WebError("waves live in different webs")
    a, b = u.roof, v.roof
    if trim_wave(u).ters == trim_wave(v).ters:
        rel = "equiv"
    elif a < b:
        rel = "lt"
    elif b < a:
        rel = "gt"
    else:
        rel = "incomparable"
    return WaveOrderWitness(rel, a, b)
