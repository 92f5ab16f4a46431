"""Executable lemma checks, run per web against the brute-force oracle.

Each check is a generator yielding ``(ok, witness)`` per case.  The runner
stops a check at its first failure and keeps the witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterator

from . import oracle
from .alternating import (
    apply_alternating,
    find_augmenting,
    is_augmenting,
    validate_alternating,
)
from .bipartite import lambda_graph, matching_to_web, to_bipartite, warp_to_matching
from .core import (
    Warp,
    Web,
    WebError,
    extends,
    forward_extends,
    ordered,
    warp_arrow,
    warp_quotient,
    warp_star,
)
from .menger import certificate_problems, is_hindered, menger_structure, safe_link
from .separation import delete_web, essential, is_separating, quotient_web, rf, rf_circle, roof
from .waves import is_loose, is_wave, maximal_wave, trim_wave, Wave

Case = Iterator[tuple[bool, str]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    witness: str | None = None


@dataclass(frozen=True)
class LemmaReport:
    web: Web
    results: tuple

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures


class Context:
    """Lazily computed enumerations shared by the checks of one web."""

    def __init__(self, w: Web, budget: oracle.EnumerationBudget, supplied: tuple = (), exhaustive: bool = False):
        self.w = w
        self.budget = budget
        self.supplied = supplied
        self.exhaustive = exhaustive
        self.rng = random.Random(budget.seed)

    @cached_property
    def subsets(self) -> list:
        vs = self.w.order
        return [frozenset(c) for k in range(len(vs) + 1) for c in combinations(vs, k)]

    @cached_property
    def non_source_subsets(self) -> list:
        return [S for S in self.subsets if not S & self.w.A]

    @cached_property
    def waves(self) -> list:
        return oracle.enumerate_waves(self.w)

    @cached_property
    def warps(self) -> list:
        out = []
        for y in oracle.enumerate_a_starting_warps(self.w):
            out.append(y)
            if len(out) >= self.budget.max_cases:
                break
        return out

    @cached_property
    def ab_warps(self) -> list:
        return oracle.enumerate_ab_warps(self.w)

    @cached_property
    def all_paths(self) -> list:
        return [p for v in self.w.order for p in oracle.simple_paths(self.w, v)]

    def sample(self, pool: list, k: int) -> list:
        if self.exhaustive or len(pool) <= k:
            return list(pool)
        return self.rng.sample(pool, k)


REGISTRY: dict[str, Callable[[Context], Case]] = {}


def check(name: str):
    def deco(fn):
        REGISTRY[name] = fn
        return fn

    return deco


def _q(w: Web, X) -> Web:
    return quotient_web(w, X, allow_sources=True)


# ------------------------------------------------------------------- warps


@check("supplied_warps_valid")
def _supplied(c: Context) -> Case:
    for y in c.supplied:
        ok = isinstance(y, Warp) and y.is_in(c.w) and y.ins <= c.w.A
        yield ok, f"supplied {y!r} is not an A-starting warp of the web"
        if ok:
            yield is_wave(c.w, y) == oracle.brute_is_wave(c.w, y), f"wave test disagrees on {y!r}"


@check("arrow_forward_extension")
def _arrow_fe(c: Context) -> Case:
    pool = c.sample(c.warps, 40)
    for u in pool:
        for v in pool:
            r = warp_arrow(u, v)
            yield forward_extends(r, u), f"{u} arrow {v} = {r}"
            yield forward_extends(v, u) == (r == v), f"u={u} w={v}"


@check("warp_quotient_in_quotient_web")
def _wq_warp(c: Context) -> Case:
    for W in c.sample(c.warps, 60):
        for X in c.subsets:
            q = _q(c.w, X)
            yield warp_quotient(W, X, c.w).is_in(q), f"W={W} X={ordered(X)}"


@check("warp_quotient_ends")
def _wq_ends(c: Context) -> Case:
    for W in c.sample(c.warps, 60):
        for X in c.subsets:
            r = roof(c.w, X)
            Q = warp_quotient(W, X, c.w)
            ok_in = Q.ins == (W.ins | X) - r.RF_circle
            ok_ter = Q.ters >= (W.ters - r.RF_circle) | (r.essential - W.vertices)
            keep = all((e,) in Q for e in r.essential - W.vertices)
            yield ok_in and ok_ter and keep, f"W={W} X={ordered(X)} W/X={Q}"


@check("warp_quotient_monotone")
def _wq_mono(c: Context) -> Case:
    pool = c.sample(c.warps, 30)
    for W in pool:
        for W2 in pool:
            if not extends(W2, W):
                continue
            for X in c.sample(c.subsets, 8):
                a, b = warp_quotient(W, X, c.w), warp_quotient(W2, X, c.w)
                ok = extends(b, a) and (not forward_extends(W2, W) or forward_extends(b, a))
                yield ok, f"W={W} W'={W2} X={ordered(X)}"


# -------------------------------------------------------------- separation


@check("roof_matches_oracle")
def _roof_oracle(c: Context) -> Case:
    for S in c.subsets:
        r = roof(c.w, S)
        ok = r.RF == oracle.brute_rf(c.w, S) and r.essential == oracle.brute_essential(c.w, S)
        yield ok, f"S={ordered(S)}"


@check("separation_matches_oracle")
def _sep_oracle(c: Context) -> Case:
    for S in c.subsets:
        yield is_separating(c.w, S, c.w.A, c.w.B) == oracle.brute_separates(c.w, S, c.w.A, c.w.B), f"S={ordered(S)}"


@check("essential_part_separates")
def _ess_sep(c: Context) -> Case:
    for S in c.subsets:
        if is_separating(c.w, S, c.w.A, c.w.B):
            yield is_separating(c.w, essential(c.w, S), c.w.A, c.w.B), f"S={ordered(S)}"


@check("last_roofed_vertex_is_essential")
def _last_roofed(c: Context) -> Case:
    paths = c.sample(c.all_paths, 200)
    for S in c.sample(c.subsets, 64):
        r = roof(c.w, S)
        for p in paths:
            hits = [v for v in p if v in r.RF]
            if hits:
                yield hits[-1] in r.essential | {p[-1]}, f"S={ordered(S)} P={p}"


@check("essential_sandwich")
def _ess_sandwich(c: Context) -> Case:
    for D in c.subsets:
        ED = essential(c.w, D)
        rest = ordered(D - ED)
        for k in range(len(rest) + 1):
            for extra in combinations(rest, k):
                C = ED | frozenset(extra)
                yield essential(c.w, C) == ED, f"D={ordered(D)} C={ordered(C)}"


@check("four_set_roof_observation")
def _stxy(c: Context) -> Case:
    for _ in range(min(300, c.budget.max_cases)):
        S, T, X, Y = (c.rng.choice(c.subsets) for _ in range(4))
        Y = Y - X
        if X <= rf(c.w, T | Y) and Y <= rf(c.w, S | X):
            yield X | Y <= rf(c.w, S | T), f"S={ordered(S)} T={ordered(T)} X={ordered(X)} Y={ordered(Y)}"


@check("roof_sandwich_separates")
def _sandwich(c: Context) -> Case:
    for _ in range(min(300, c.budget.max_cases)):
        R, S, T = (c.rng.choice(c.subsets) for _ in range(3))
        T = essential(c.w, T)
        if rf(c.w, R) <= rf(c.w, S) <= rf(c.w, T):
            yield is_separating(c.w, S, R, T), f"R={ordered(R)} S={ordered(S)} T={ordered(T)}"


@check("deletion_roof_union")
def _del_roof(c: Context) -> Case:
    for X in c.subsets:
        d = delete_web(c.w, X, trim=False)
        for Y in c.sample([Y for Y in c.subsets if not Y & X], 16):
            yield rf(c.w, X | Y) == X | rf(d, Y), f"X={ordered(X)} Y={ordered(Y)}"


@check("quotient_roof_union")
def _q_roof(c: Context) -> Case:
    for X in c.subsets:
        rc = rf_circle(c.w, X)
        q = _q(c.w, X)
        for Y in c.sample(c.subsets, 16):
            lhs = rf_circle(c.w, X | Y)
            rhs = rc | rf_circle(q, Y - rc)
            yield lhs == rhs, f"X={ordered(X)} Y={ordered(Y)}"


@check("quotient_by_union")
def _q_union(c: Context) -> Case:
    for X in c.subsets:
        rc = rf_circle(c.w, X)
        q = _q(c.w, X)
        for Y in c.sample([Y for Y in c.subsets if not Y & rc], 16):
            yield _q(c.w, X | Y) == _q(q, Y), f"X={ordered(X)} Y={ordered(Y)}"


@check("quotient_by_essential_union")
def _q_union_cor(c: Context) -> Case:
    for X1 in c.sample(c.subsets, 16):
        for X2 in c.sample(c.subsets, 16):
            Y = essential(c.w, X1 | X2)
            g = _q(c.w, Y)
            yield _q(_q(c.w, X1), Y) == g == _q(_q(c.w, X2), Y), f"X1={ordered(X1)} X2={ordered(X2)}"


# ------------------------------------------------------------------- waves


@check("waves_match_oracle")
def _waves_oracle(c: Context) -> Case:
    for W in c.warps:
        yield is_wave(c.w, W) == oracle.brute_is_wave(c.w, W), f"W={W}"


@check("self_roofing")
def _self_roof(c: Context) -> Case:
    for W in c.waves:
        yield W.vertices <= rf(c.w, W.ters), f"W={W}"


@check("essential_subwave")
def _ess_wave(c: Context) -> Case:
    for W in c.waves:
        yield is_wave(c.w, trim_wave(Wave(W, c.w)).warp), f"W={W}"


@check("essential_path_criterion")
def _ess_path(c: Context) -> Case:
    for W in c.waves:
        ess = essential(c.w, W.ters)
        for P in W:
            rest = Warp(W.paths - {P})
            yield (P[-1] in ess) == (not is_wave(c.w, rest)), f"W={W} P={P}"


@check("wave_in_quotient")
def _wave_q(c: Context) -> Case:
    for W in c.sample(c.waves, 80):
        for X in c.subsets:
            yield is_wave(_q(c.w, X), warp_quotient(W, X, c.w)), f"W={W} X={ordered(X)}"


@check("hindrance_in_quotient")
def _hind_q(c: Context) -> Case:
    hind = [W for W in c.waves if W.ins != c.w.A]
    for S in c.subsets:
        if rf(c.w, S) & c.w.A:
            continue
        q = _q(c.w, S)
        for H in hind:
            Q = warp_quotient(H, S, c.w)
            yield is_wave(q, Q) and Q.ins != q.A, f"H={H} S={ordered(S)}"


@check("arrow_of_waves")
def _arrow_waves(c: Context) -> Case:
    pool = c.sample(c.waves, 60)
    for U in pool:
        for W in pool:
            r = warp_arrow(U, W)
            big = rf(c.w, r.ters)
            ok = is_wave(c.w, r) and rf(c.w, U.ters) <= big and rf(c.w, W.ters) <= big
            yield ok, f"U={U} W={W}"


@check("star_of_waves")
def _star(c: Context) -> Case:
    for U in c.sample(c.waves, 40):
        q = _q(c.w, U.ters)
        yield q == _q(c.w, essential(c.w, U.ters)), f"quotient over U={U} differs from over E(U)"
        for V in c.sample(oracle.enumerate_waves(q), 40):
            yield is_wave(c.w, warp_star(U, V)), f"U={U} V={V}"


@check("maximal_wave")
def _maximal(c: Context) -> Case:
    M = maximal_wave(c.w)
    yield rf(c.w, M.ters) == oracle.brute_max_rf_wave(c.w), f"M={M.warp}"
    S = trim_wave(M).ters
    yield oracle.brute_is_loose(_q(c.w, S)), f"quotient over M={M.warp} is not loose"


@check("maximal_waves_share_roof")
def _max_equiv(c: Context) -> Case:
    top = oracle.brute_max_rf_wave(c.w)
    for W in c.waves:
        if oracle.brute_is_loose(_q(c.w, essential(c.w, W.ters))):
            yield rf(c.w, W.ters) == top, f"W={W}"


@check("looseness_matches_oracle")
def _loose(c: Context) -> Case:
    yield is_loose(c.w) == oracle.brute_is_loose(c.w), "is_loose"


@check("separating_out_neighbours")
def _sep_out(c: Context) -> Case:
    inner = [Q for Q in c.subsets if Q and not Q & (c.w.A | c.w.B)]
    for Q in inner:
        d = delete_web(c.w, Q, trim=False)
        out = {y for x in Q for y in c.w.succ(x)} - Q
        for U in oracle.enumerate_waves(d)[: c.budget.max_cases]:
            if out <= rf(d, U.ters):
                yield is_wave(c.w, U), f"Q={ordered(Q)} U={U}"


# ------------------------------------------------------ menger / alternating


@check("menger_min_max")
def _minmax(c: Context) -> Case:
    s = menger_structure(c.w)
    probs = certificate_problems(c.w, s)
    yield not probs, "; ".join(probs)
    nu, sigma = oracle.brute_nu(c.w), oracle.brute_sigma(c.w)
    yield len(s.paths) == nu == sigma, f"paths={len(s.paths)} nu={nu} sigma={sigma}"


@check("hindered_matches_oracle")
def _hind(c: Context) -> Case:
    yield is_hindered(c.w) == (oracle.brute_hindrance(c.w) is not None), "is_hindered"


@check("hindered_after_deletion")
def _hind_del(c: Context) -> Case:
    if not is_hindered(c.w):
        return
    for X in c.non_source_subsets:
        yield is_hindered(delete_web(c.w, X, trim=False)), f"X={ordered(X)}"


@check("deletion_hindrance_has_wave")
def _hind_wave(c: Context) -> Case:
    if is_hindered(c.w):
        return
    for v in c.w.order:
        if v in c.w.A or not is_hindered(delete_web(c.w, {v}, trim=False)):
            continue
        yield any(v in W.ters for W in c.waves), f"v={v}"


@check("augmenting_iff_not_maximum")
def _lemma410(c: Context) -> Case:
    nu = oracle.brute_nu(c.w)
    for Y in c.ab_warps:
        q = find_augmenting(c.w, Y)
        yield (q is None) == (len(Y) == nu), f"Y={Y} q={q}"
        if q is not None:
            ok = validate_alternating(c.w, Y, q) and is_augmenting(c.w, Y, q)
            cw = apply_alternating(Y, q)
            yield ok and not cw.cycles and len(cw.paths) == len(Y) + 1, f"Y={Y} q={q}"


@check("augmenting_iff_lambda_path")
def _lemma48(c: Context) -> Case:
    conv = to_bipartite(c.w)
    for Y in c.ab_warps:
        lam = matching_to_web(conv.delta, warp_to_matching(c.w, Y), trim=False)
        through = bool(oracle.ab_paths(lam))
        free_ab = bool((c.w.A & c.w.B) - Y.vertices)
        yield (find_augmenting(c.w, Y) is not None) == (through or free_ab), f"Y={Y}"


@check("linkage_iff_marriage")
def _lemma47(c: Context) -> Case:
    conv = to_bipartite(c.w)
    for Y in c.ab_warps:
        J = warp_to_matching(c.w, Y)
        married = {m for m, _ in J} == conv.delta.M and c.w.A & c.w.B <= Y.vertices
        yield Y.is_linkage(c.w) == married, f"Y={Y}"


@check("safe_link_residue")
def _safe_link(c: Context) -> Case:
    if is_hindered(c.w):
        return
    for a in c.w.order:
        if a in c.w.A:
            p = safe_link(c.w, a)
            rest = delete_web(c.w, p, trim=False)
            yield oracle.brute_linkable(rest), f"a={a} P={p}"


# ------------------------------------------------------------------ runner


def run_suite(
    w: Web, budget: oracle.EnumerationBudget, names=None, warps=(), *, exhaustive: bool = False
) -> LemmaReport:
    """Run the registered checks (all, or ``names``) on ``w``.

    ``warps`` are caller-supplied warps that are validated against the web.
    With ``exhaustive`` no pool is subsampled; only ``max_cases`` caps a check.
    """
    if len(w.vertices) > budget.max_vertices:
        raise oracle.BudgetExceeded(f"{len(w.vertices)} vertices exceed the budget of {budget.max_vertices}")
    ctx = Context(w, budget, tuple(warps), exhaustive)
    results = []
    for name in names or REGISTRY:
        n = 0
        witness = None
        try:
            for ok, wit in REGISTRY[name](ctx):
                n += 1
                if not ok:
                    witness = wit
                    break
                if n >= budget.max_cases:
                    break
        except (WebError, AssertionError, TypeError, KeyError) as exc:
            witness = f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name, witness is None, n, witness))
    return LemmaReport(w, tuple(results))
