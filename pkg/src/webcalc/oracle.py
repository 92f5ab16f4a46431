"""Brute-force ground truth.

Nothing here calls the search machinery it is used to check: every answer
comes from enumerating simple paths, subsets or path families directly.
Only the data containers of :mod:`webcalc.core` are shared.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .core import Vertex, Warp, Web, WebError, ordered

DEFAULT_BOUND = 16


class BudgetExceeded(WebError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_vertices: int = DEFAULT_BOUND
    max_cases: int = 200_000
    seed: int = 0

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_cases <= 0:
            raise ValueError("budget bounds must be positive")


def oracle_bound() -> int:
    return int(os.environ.get("WEBCALC_ORACLE_BOUND", DEFAULT_BOUND))


def _guard(w: Web, bound: int | None) -> None:
    limit = oracle_bound() if bound is None else bound
    if len(w.vertices) > limit:
        raise BudgetExceeded(f"{len(w.vertices)} vertices exceed oracle bound {limit}")


# ------------------------------------------------------------------ paths


def simple_paths(w: Web, start: Vertex, *, stop: frozenset = frozenset(), avoid: frozenset = frozenset()) -> Iterator[tuple]:
    """All simple paths from ``start``; a path is not continued past ``stop``."""
    if start in avoid:
        return
    path = [start]
    on = {start}

    def rec():
        yield tuple(path)
        if path[-1] in stop and len(path) > 1:
            return
        for u in w.succ(path[-1]):
            if u in on or u in avoid:
                continue
            path.append(u)
            on.add(u)
            yield from rec()
            path.pop()
            on.discard(u)

    yield from rec()


def xy_paths(w: Web, X: Iterable[Vertex], Y: Iterable[Vertex]) -> list[tuple]:
    """``X``-``Y`` paths whose interior avoids ``X ∪ Y`` (enough for separation)."""
    X, Y = frozenset(X), frozenset(Y)
    out = []
    for x in ordered(X):
        if x in Y:
            out.append((x,))
            continue
        for p in simple_paths(w, x, stop=Y, avoid=X - {x}):
            if len(p) > 1 and p[-1] in Y:
                out.append(p)
    return out


def ab_paths(w: Web) -> list[tuple]:
    return xy_paths(w, w.A, w.B)


def brute_separates(w: Web, S: Iterable[Vertex], X: Iterable[Vertex], Y: Iterable[Vertex]) -> bool:
    S = frozenset(S)
    return all(S.intersection(p) for p in xy_paths(w, X, Y))


def brute_rf(w: Web, S: Iterable[Vertex]) -> frozenset:
    """Vertices every one of whose paths to ``B`` meets ``S``."""
    S = frozenset(S)
    out = set()
    for v in w.vertices:
        if all(S.intersection(p) for p in simple_paths(w, v) if p[-1] in w.B):
            out.add(v)
    return frozenset(out)


def brute_essential(w: Web, S: Iterable[Vertex]) -> frozenset:
    S = frozenset(S)
    out = set()
    for s in S:
        rest = S - {s}
        if any(p[-1] in w.B and not rest.intersection(p) for p in simple_paths(w, s)):
            out.add(s)
    return frozenset(out)


def brute_sigma(w: Web, X=None, Y=None, *, bound: int | None = None) -> int:
    """Minimum size of an ``X``-``Y`` separating set (defaults: ``A``, ``B``)."""
    _guard(w, bound)
    X = w.A if X is None else frozenset(X)
    Y = w.B if Y is None else frozenset(Y)
    order = ordered(w.vertices)
    bit = {v: 1 << i for i, v in enumerate(order)}
    masks = {sum(bit[v] for v in p) for p in xy_paths(w, X, Y)}
    if not masks:
        return 0
    for k in range(len(order) + 1):
        for S in combinations(order, k):
            m = sum(bit[v] for v in S)
            if all(m & pm for pm in masks):
                return k
    raise AssertionError("V itself separates")


def brute_nu(w: Web, *, bound: int | None = None) -> int:
    """Maximum number of disjoint ``A``-``B`` paths, by backtracking."""
    _guard(w, bound)
    sources = ordered(w.A)
    best = 0
    cap = min(len(w.A), len(w.B))

    def rec(i: int, used: frozenset, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if best == cap or count + (len(sources) - i) <= best:
            return
        if i == len(sources):
            return
        a = sources[i]
        if a not in used:
            for p in simple_paths(w, a, stop=w.B, avoid=used):
                if p[-1] in w.B:
                    rec(i + 1, used | frozenset(p), count + 1)
                    if best == cap:
                        return
        rec(i + 1, used, count)

    rec(0, frozenset(), 0)
    return best


def enumerate_ab_warps(w: Web, *, bound: int | None = None) -> list[Warp]:
    """Every warp of ``A``-``B`` paths (including the empty warp)."""
    _guard(w, bound)
    sources = ordered(w.A)
    out: list[Warp] = []

    def rec(i: int, used: frozenset, chosen: list) -> None:
        if i == len(sources):
            out.append(Warp(frozenset(chosen)))
            return
        rec(i + 1, used, chosen)
        a = sources[i]
        if a in used:
            return
        for p in simple_paths(w, a, stop=w.B, avoid=used):
            if p[-1] in w.B:
                rec(i + 1, used | frozenset(p), chosen + [p])

    rec(0, frozenset(), [])
    return out


def enumerate_a_starting_warps(w: Web, *, bound: int | None = None) -> Iterator[Warp]:
    """Every ``A``-starting warp, streamed."""
    _guard(w, bound)
    sources = ordered(w.A)

    def rec(i: int, used: frozenset, chosen: list):
        if i == len(sources):
            yield Warp(frozenset(chosen))
            return
        yield from rec(i + 1, used, chosen)
        a = sources[i]
        if a in used:
            return
        for p in simple_paths(w, a, avoid=used):
            yield from rec(i + 1, used | frozenset(p), chosen + [p])

    yield from rec(0, frozenset(), [])


def brute_is_wave(w: Web, y: Warp) -> bool:
    if not y.ins <= w.A:
        return False
    if not all(p in w.edges for q in y.paths for p in zip(q, q[1:])):
        return False
    return brute_separates(w, y.ters, w.A, w.B)


def enumerate_waves(w: Web, *, bound: int | None = None) -> list[Warp]:
    """All waves: ``A``-starting warps whose terminals separate ``A`` from ``B``."""
    masks = [frozenset(p) for p in ab_paths(w)]
    return [y for y in enumerate_a_starting_warps(w, bound=bound) if all(y.ters & m for m in masks)]


def brute_hindrance(w: Web, *, bound: int | None = None) -> Warp | None:
    """Some hindrance of ``w``, or ``None`` when the web is unhindered."""
    masks = [frozenset(p) for p in ab_paths(w)]
    for y in enumerate_a_starting_warps(w, bound=bound):
        if y.ins != w.A and all(y.ters & m for m in masks):
            return y
    return None


def brute_is_loose(w: Web, *, bound: int | None = None) -> bool:
    trivial = Warp.singletons(w.A)
    return all(y == trivial for y in enumerate_waves(w, bound=bound))


def brute_max_rf_wave(w: Web, *, bound: int | None = None) -> frozenset:
    """Largest roofed set over all waves; it must contain every other one."""
    roofs = [brute_rf(w, y.ters) for y in enumerate_waves(w, bound=bound)]
    top = frozenset().union(*roofs)
    if top not in roofs:
        raise AssertionError("no wave attains the union of all roofs")
    return top


def brute_linkable(w: Web, *, bound: int | None = None) -> bool:
    return brute_nu(w, bound=bound) == len(w.A)


# ------------------------------------------------------------- bipartite


def brute_matching(M: Iterable[Vertex], W: Iterable[Vertex], edges: Iterable[tuple]) -> set:
    """Maximum matching by Kuhn's augmenting search (left side ``M``)."""
    adj: dict = {m: [] for m in M}
    for m, x in edges:
        adj[m].append(x)
    mate: dict = {}

    def try_(m, seen) -> bool:
        for x in ordered(adj[m]):
            if x in seen:
                continue
            seen.add(x)
            if x not in mate or try_(mate[x], seen):
                mate[x] = m
                return True
        return False

    for m in ordered(adj):
        try_(m, set())
    return {(m, x) for x, m in mate.items()}


def brute_min_cover(M, W, edges) -> int:
    verts = ordered(set(M) | set(W))
    edges = list(edges)
    for k in range(len(verts) + 1):
        for C in combinations(verts, k):
            C = set(C)
            if all(m in C or x in C for m, x in edges):
                return k
    raise AssertionError("unreachable")


def brute_marriage_exists(M, W, edges) -> bool:
    """Hall's condition checked over every subset of ``M``."""
    M = ordered(M)
    nbrs = {m: {x for mm, x in edges if mm == m} for m in M}
    for k in range(1, len(M) + 1):
        for S in combinations(M, k):
            if len(set().union(*(nbrs[m] for m in S))) < k:
                return False
    return True


# ---------------------------------------------------------------- harness


def lemma_suite(w: Web, budget: EnumerationBudget | None = None, *, warps=()):
    """Run every registered lemma check against ``w``; see :mod:`webcalc.lemmas`."""
    from .lemmas import run_suite

    return run_suite(w, budget or EnumerationBudget(max_vertices=oracle_bound()), warps=warps)


# ------------------------------------------------------------- enumeration


def all_webs(n: int) -> Iterator[Web]:
    """Every valid web on vertices ``v0..v{n-1}`` (labelled, trimmed, no repairs)."""
    names = [f"v{i}" for i in range(n)]
    for labels in _product("NABX", n):
        A = frozenset(v for v, l in zip(names, labels) if l in "AX")
        B = frozenset(v for v, l in zip(names, labels) if l in "BX")
        allowed = [
            (x, y) for x in names for y in names
            if x != y and y not in A and x not in B
        ]
        for mask in range(1 << len(allowed)):
            edges = frozenset(e for k, e in enumerate(allowed) if mask >> k & 1)
            w = Web(frozenset(names), edges, A, B)
            if w.is_trimmed():
                yield w


def _product(alphabet: str, n: int) -> Iterator[str]:
    if n == 0:
        yield ""
        return
    for head in _product(alphabet, n - 1):
        for c in alphabet:
            yield head + c


def small_webs(max_n: int = 4) -> Iterator[Web]:
    for n in range(1, max_n + 1):
        yield from all_webs(n)
