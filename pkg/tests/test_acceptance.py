"""Acceptance criteria, one function per criterion.

Run under pytest (one PASS/FAIL line per criterion is printed) or directly:
``python3 tests/test_acceptance.py [numbers...]``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from functools import lru_cache

import networkx as nx
import pytest

from webcalc import oracle
from webcalc.alternating import (
    AlternatingPath,
    apply_alternating,
    find_augmenting,
    is_augmenting,
    is_degenerate,
    is_safe,
    safety_violations,
    sap_family,
    validate_alternating,
)
from webcalc.bipartite import BipartiteGraph, hall_check, konig
from webcalc.core import Warp, make_web
from webcalc.io import random_web
from webcalc.lemmas import run_suite
from webcalc.menger import certificate_problems, is_hindered, menger_structure, safe_link
from webcalc.oracle import EnumerationBudget
from webcalc.sampling import alternating_paths, random_sap_instance, random_warp
from webcalc.separation import delete_web

RANDOM_WEBS = 10_000
MAX_RANDOM_N = 10


@lru_cache(maxsize=None)
def small_corpus() -> tuple:
    return tuple(oracle.small_webs(4))


@lru_cache(maxsize=None)
def random_corpus() -> tuple:
    out = []
    for seed in range(RANDOM_WEBS):
        rng = random.Random(seed)
        out.append(random_web(rng.randint(1, MAX_RANDOM_N), rng.uniform(0.05, 0.35), seed))
    return tuple(out)


def full_corpus():
    yield from small_corpus()
    yield from random_corpus()


@lru_cache(maxsize=None)
def structures() -> tuple:
    return tuple((w, menger_structure(w)) for w in full_corpus())


def _first(bad: list, limit: int = 3) -> str:
    return "; ".join(map(str, bad[:limit]))


# ---------------------------------------------------------------- criteria


def criterion_1():
    bad = []
    for w, s in structures():
        sigma, nu = oracle.brute_sigma(w), oracle.brute_nu(w)
        probs = certificate_problems(w, s)
        if not (s.nu == sigma == nu) or probs:
            bad.append((sorted(w.vertices), s.nu, sigma, nu, probs))
    n = len(small_corpus()) + len(random_corpus())
    return not bad, f"{n} webs ({len(small_corpus())} exhaustive), {len(bad)} mismatches {_first(bad)}"


def criterion_2():
    bad = []
    for w, s in structures():
        chosen = [s.choice[p] for p in s.paths]
        if set(s.choice) != set(s.paths.paths) or len(set(chosen)) != len(chosen):
            bad.append(w)
        elif any(s.choice[p] not in p for p in s.paths):
            bad.append(w)
    return not bad, f"{len(structures())} structures, {len(bad)} with a faulty choice map"


def criterion_3():
    bad = [w for w, s in structures() if not oracle.brute_separates(w, s.separator, w.A, w.B)]
    return not bad, f"{len(structures())} separators checked by path enumeration, {len(bad)} fail"


def _ab_count(w, y: Warp) -> int:
    return sum(1 for p in y if p[0] in w.A and p[-1] in w.B)


def criterion_4():
    pairs = bad = 0
    for w in small_corpus():
        nu = oracle.brute_nu(w)
        for y in oracle.enumerate_ab_warps(w):
            pairs += 1
            q = find_augmenting(w, y)
            if (q is None) != (len(y) == nu):
                bad += 1
            elif q is not None:
                if not is_augmenting(w, y, q) or _ab_count(w, apply_alternating(y, q).path_part) != len(y) + 1:
                    bad += 1
    return not bad, f"{pairs} (web, A-B warp) pairs, {bad} violations"


def _independent_safe(y: Warp, q: AlternatingPath) -> bool:
    for P in y:
        idx = [k for k, e in enumerate(zip(P, P[1:])) if e in q.backward_edges]
        if idx and idx != list(range(idx[0], idx[-1] + 1)):
            return False
    return nx.is_directed_acyclic_graph(nx.DiGraph(list(q.forward_edges - y.edges)))


def criterion_5():
    safe = unsafe = bad = 0
    kinds = {"interval": 0, "cycle": 0}
    seed = 0
    while (safe < 5000 or unsafe < 500) and seed < 20_000:
        rng = random.Random(seed)
        w = random_web(rng.randint(4, 9), rng.uniform(0.2, 0.5), seed)
        y = random_warp(w, rng, max_paths=3, stop_p=0.15)
        seed += 1
        for q in alternating_paths(w, y, limit=400):
            if is_safe(y, q):
                cw = apply_alternating(y, q)
                ok = not cw.cycles and _independent_safe(y, q)
                g = nx.DiGraph(list(cw.edges))
                ok = ok and nx.is_directed_acyclic_graph(g) and all(d <= 1 for _, d in g.out_degree())
                safe += 1
            else:
                v = safety_violations(y, q)
                ok = bool(v) and not _independent_safe(y, q)
                for msg in v:
                    kinds["interval" if "interval" in msg else "cycle"] += 1
                unsafe += 1
            bad += not ok
    passed = not bad and safe >= 5000 and unsafe >= 500
    return passed, f"{safe} safe applied cycle-free, {unsafe} unsafe detected ({kinds}), {bad} failures"


LEMMAS_6 = [
    "arrow_of_waves",
    "self_roofing",
    "wave_in_quotient",
    "star_of_waves",
    "maximal_wave",
    "essential_path_criterion",
]


def criterion_6():
    budget = EnumerationBudget(max_vertices=10, max_cases=10**9)
    cases = dict.fromkeys(LEMMAS_6, 0)
    bad = []
    for w in small_corpus():
        rep = run_suite(w, budget, LEMMAS_6, exhaustive=True)
        for r in rep.results:
            cases[r.name] += r.cases
        bad += [(sorted(w.edges), r.name, r.witness) for r in rep.failures]
    return not bad, f"{len(small_corpus())} webs, cases {cases}, failures {_first(bad)}"


def _all_bipartite(max_side: int = 4):
    for m in range(max_side + 1):
        for k in range(max_side + 1):
            M = [f"m{i}" for i in range(m)]
            W = [f"w{j}" for j in range(k)]
            cells = list(itertools.product(M, W))
            for mask in range(1 << len(cells)):
                yield BipartiteGraph(frozenset(M), frozenset(W), frozenset(c for i, c in enumerate(cells) if mask >> i & 1))


def criterion_7():
    n = bad = deficient = 0
    for d in _all_bipartite():
        n += 1
        k = konig(d)
        F, C = k.matching, k.cover
        ok = len(F) == len(C) == oracle.brute_min_cover(d.M, d.W, d.edges)
        ok = ok and len(F) == len(oracle.brute_matching(d.M, d.W, d.edges))
        ok = ok and all(m in C or x in C for m, x in d.edges)
        ok = ok and all(len(C & set(e)) == 1 for e in F)
        h = hall_check(d)
        ok = ok and h.matchable == (len(F) == len(d.M)) == oracle.brute_marriage_exists(d.M, d.W, d.edges)
        if h.deficient is not None:
            deficient += 1
            ok = ok and h.deficient <= d.M and len(d.neighbours(h.deficient)) < len(h.deficient)
        bad += not ok
    return not bad, f"{n} bipartite graphs, {deficient} deficient certificates, {bad} failures"


def criterion_8():
    bad = [w for w in small_corpus() if is_hindered(w) != (oracle.brute_hindrance(w) is not None)]
    return not bad, f"{len(small_corpus())} webs, {len(bad)} disagreements"


def criterion_9():
    webs = links = bad = 0
    seed = 0
    while webs < 1000:
        rng = random.Random(10**6 + seed)
        w = random_web(rng.randint(2, MAX_RANDOM_N), rng.uniform(0.15, 0.45), 10**6 + seed)
        seed += 1
        if not w.A or is_hindered(w):
            continue
        webs += 1
        for a in sorted(w.A):
            p = safe_link(w, a)
            links += 1
            if not (p[0] == a and p[-1] in w.B) or is_hindered(delete_web(w, p, trim=False)):
                bad += 1
    return not bad, f"{webs} unhindered webs, {links} safe links, {bad} hindered residues"


def criterion_10():
    pairs = paths = bad = 0
    seed = 0
    while pairs < 1000 and seed < 50_000:
        rng = random.Random(seed)
        w = random_web(rng.randint(3, MAX_RANDOM_N), rng.uniform(0.15, 0.5), seed)
        seed += 1
        inst = random_sap_instance(w, rng)
        if inst is None or not inst[0].ins - inst[1].ins:
            continue
        z, y = inst
        pairs += 1
        fam = sap_family(w, z, y)
        ends = list(fam.terminals().values())
        ok = len(set(ends)) == len(ends) and set(ends) <= z.ters
        for q in fam.assignments.values():
            paths += 1
            ok = ok and validate_alternating(w, y, q) and is_safe(y, q) and q.end not in y.vertices
        bad += not ok
    return not bad and pairs >= 1000, f"{pairs} (Z, Y) pairs, {paths} s.a.p.s, {bad} failures"


def criterion_11():
    w = make_web("abcdstxy", ["ab", "bc", "cd", "ad", "sb", "bt", "xc", "cy"], "asx", "dty")
    Y, Z = Warp.of("abcd"), Warp.of("ad", "sbt", "xcy")

    def alt(s):
        return AlternatingPath.from_walk(Y, tuple(s))

    expect = {
        "Alt(x,c,b,t)": (True, False),
        "Alt(s,b,a,d,c,y)": (False, None),
        "Alt(s,b,a,d,c,b,t)": (True, True),
        "Alt(x,c,b,a,d,c,y)": (True, True),
    }
    got = {}
    for text in expect:
        q = alt(text[4:-1].replace(",", ""))
        assert repr(q) == text and validate_alternating(w, Y, q)
        safe = is_safe(Y, q)
        got[text] = (safe, is_degenerate(Y, q) if safe else None)
    fam = sap_family(w, Z, Y)
    fam_text = {k: repr(v) for k, v in fam.assignments.items()}
    want_fam = {"s": "Alt(s,b,a,d,c,b,t)", "x": "Alt(x,c,b,a,d,c,y)"}
    ok = got == expect and fam_text == want_fam
    return ok, f"verdicts {got}; family {fam_text}"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


def run_criterion(i: int) -> tuple[bool, str]:
    t0 = time.perf_counter()
    passed, detail = CRITERIA[i]()
    line = f"{'PASS' if passed else 'FAIL'} criterion {i}: {detail} [{time.perf_counter() - t0:.1f}s]"
    return passed, line


@pytest.mark.slow
@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i, capsys):
    passed, line = run_criterion(i)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    chosen = [int(a) for a in sys.argv[1:]] or sorted(CRITERIA)
    results = [run_criterion(i) for i in chosen]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
