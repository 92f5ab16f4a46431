"""Seeded random warps, alternating paths and warp pairs for sweeps and tests."""

from __future__ import annotations

import random

from .alternating import AlternatingPath, alternating_violations
from .core import Path, Vertex, Warp, Web, WebError, ordered


def random_path(w: Web, rng: random.Random, start: Vertex, avoid: set, stop_p: float = 0.25) -> Path:
    p = [start]
    while rng.random() > stop_p:
        nxt = [z for z in w.succ(p[-1]) if z not in avoid and z not in p]
        if not nxt:
            break
        p.append(rng.choice(nxt))
    return tuple(p)


def random_warp(w: Web, rng: random.Random, *, starts=None, max_paths: int = 3, stop_p: float = 0.25) -> Warp:
    """Up to ``max_paths`` disjoint random paths, starting in ``starts`` (default: anywhere)."""
    pool = ordered(w.vertices if starts is None else starts)
    rng.shuffle(pool)
    used: set = set()
    paths = []
    for s in pool[: rng.randint(0, max_paths)]:
        if s in used:
            continue
        p = random_path(w, rng, s, used, stop_p)
        used.update(p)
        paths.append(p)
    return Warp(frozenset(paths))


def random_ab_warp(w: Web, rng: random.Random, *, tries: int = 20) -> Warp:
    """Disjoint ``A``-``B`` paths found by random walks from shuffled sources."""
    used: set = set()
    paths = []
    for a in rng.sample(ordered(w.A), len(w.A)):
        if a in used:
            continue
        for _ in range(tries):
            p = random_path(w, rng, a, used, stop_p=0.0)
            if p[-1] in w.B:
                used.update(p)
                paths.append(p)
                break
    return Warp(frozenset(paths))


def random_alternating_walk(w: Web, y: Warp, rng: random.Random, max_steps: int = 8, back_bias: float = 0.5) -> tuple | None:
    """A random vertex sequence that steps forward along edges or backward along ``y``."""
    free = ordered(w.vertices - y.vertices)
    if not free:
        return None
    seq = [rng.choice(free)]
    back = {b: a for a, b in y.edges}
    for _ in range(rng.randint(1, max_steps)):
        x = seq[-1]
        opts = [z for z in w.succ(x) if (x, z) not in y.edges]
        if x in back and (not opts or rng.random() < back_bias):
            opts = [back[x]]
        if not opts:
            break
        seq.append(rng.choice(opts))
    return tuple(seq)


def random_alternating_path(
    w: Web, y: Warp, rng: random.Random, *, tries: int = 50, max_steps: int = 8
) -> AlternatingPath | None:
    """Rejection-sample a valid non-trivial ``y``-alternating path."""
    for _ in range(tries):
        seq = random_alternating_walk(w, y, rng, max_steps)
        if seq is None:
            return None
        if len(seq) < 2:
            continue
        try:
            q = AlternatingPath.from_walk(y, seq)
            if not alternating_violations(w, y, q):
                return q
        except WebError:  # malformed walks are simply rejected
            continue
    return None


def random_sap_instance(w: Web, rng: random.Random) -> tuple[Warp, Warp] | None:
    """A pair ``(Z, Y)`` meeting the preconditions of :func:`sap_family`, or ``None``."""
    z = random_warp(w, rng, max_paths=4, stop_p=0.2)
    if not z.paths:
        return None
    chosen = [p for p in z if rng.random() < 0.5]
    if not chosen:
        return None
    used = set().union(*(set(p) for p in z))
    ypaths = []
    for p in chosen:
        # Y path shares its start with a Z path and then wanders through Z's vertices
        q = [p[0]]
        taken = {v for yp in ypaths for v in yp} | {c[0] for c in chosen if c is not p}
        while rng.random() > 0.3:
            nxt = [t for t in w.succ(q[-1]) if t not in q and t not in taken]
            if not nxt:
                break
            on_z = [t for t in nxt if t in used]
            q.append(rng.choice(on_z if on_z and rng.random() < 0.7 else nxt))
        ypaths.append(tuple(q))
    y = Warp(frozenset(ypaths))
    others = z.ins - y.ins
    if others & y.vertices or (z.ters & y.vertices) - y.ters:
        return None
    return z, y


def alternating_paths(w: Web, y: Warp, *, max_steps: int = 7, limit: int = 20_000):
    """Every valid non-trivial ``y``-alternating path of at most ``max_steps`` steps.

    Depth-first over step sequences; prefixes that already break a condition
    are pruned.  Stops after ``limit`` prefixes.
    """
    back = {b: a for a, b in y.edges}
    budget = [limit]

    def rec(seq: list):
        budget[0] -= 1
        if budget[0] < 0:
            return
        if len(seq) > 1:
            try:
                q = AlternatingPath.from_walk(y, seq)
                if alternating_violations(w, y, q, complete=False):
                    return
                if not alternating_violations(w, y, q):
                    yield q
            except WebError:
                return
        if len(seq) > max_steps:
            return
        x = seq[-1]
        steps = [z for z in w.succ(x) if (x, z) not in y.edges]
        if x in back:
            steps.append(back[x])
        for z in ordered(steps):
            seq.append(z)
            yield from rec(seq)
            seq.pop()

    for s in ordered(w.vertices - y.vertices):
        yield from rec([s])
