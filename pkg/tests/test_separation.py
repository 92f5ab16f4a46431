import itertools

import pytest

from webcalc import oracle
from webcalc.core import WebError, make_web
from webcalc.separation import (
    delete_web,
    essential,
    induced_roofed,
    is_separating,
    quotient_web,
    rf,
    roof,
)


def test_separating_examples(chain, diamond):
    assert is_separating(chain, "x", "a", "b")
    assert not is_separating(chain, "", "a", "a")
    assert not is_separating(diamond, "x", "a", "b")


def test_roof_of_middle(chain):
    r = roof(chain, "x")
    assert r.RF == {"a", "x"} and r.essential == {"x"} and r.RF_circle == {"a"}


def test_inessential_source(chain):
    assert essential(chain, "xa") == {"x"}


def test_roof_of_b_is_everything(diamond):
    assert rf(diamond, diamond.B) == diamond.vertices
    assert essential(diamond, diamond.B) == diamond.B


def test_delete(chain):
    assert delete_web(chain, ()) == chain
    d = delete_web(chain, "x")
    assert d.A == frozenset() and d.vertices == {"a", "b"}
    assert delete_web(chain, "x", trim=False).A == {"a"}


def test_quotient_identity(chain):
    assert quotient_web(chain, ()) == chain


def test_quotient_over_middle(chain):
    q = quotient_web(chain, "x")
    assert q.vertices == {"x", "b"} and q.A == {"x"} and q.B == {"b"} and q.edges == {("x", "b")}


def test_quotient_rejects_sources(chain):
    with pytest.raises(WebError):
        quotient_web(chain, "a")
    assert quotient_web(chain, "a", allow_sources=True).A == {"a"}


def test_quotient_by_sink_matches_deletion_for_linkability():
    # in bipartite webs the quotient over a sink equals (trimmed) deletion for linkability
    from webcalc.bipartite import bipartite_web
    from webcalc.io import random_bipartite
    from webcalc.menger import is_hindered

    for seed in range(200):
        w = bipartite_web(random_bipartite(3, 3, 0.4, seed))
        w = make_web(w.order, w.edges, w.A, w.B)
        for b in w.B:
            assert is_hindered(quotient_web(w, {b})) == is_hindered(delete_web(w, {b})), (seed, b)


def test_induced_roofed(chain):
    g = induced_roofed(chain, rf(chain, "x"))
    assert g.vertices == {"a", "x"} and g.B == {"x"} and g.A == {"a"}
    assert induced_roofed(g, g.vertices) == g


def test_brute_sigma_examples(chain, diamond):
    assert oracle.brute_sigma(chain) == 1
    assert oracle.brute_sigma(diamond) == 1
    two = make_web(["a1", "x1", "b1", "a2", "x2", "b2"], [("a1", "x1"), ("x1", "b1"), ("a2", "x2"), ("x2", "b2")], ["a1", "a2"], ["b1", "b2"])
    assert oracle.brute_sigma(two) == 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_roof_agrees_with_oracle_exhaustive(n):
    for w in oracle.all_webs(n):
        for k in range(n + 1):
            for S in itertools.combinations(w.order, k):
                r = roof(w, S)
                assert r.RF == oracle.brute_rf(w, S), (w, S)
                assert r.essential == oracle.brute_essential(w, S), (w, S)
                assert is_separating(w, S, w.A, w.B) == oracle.brute_separates(w, S, w.A, w.B)


@pytest.mark.parametrize("n", [2, 3])
def test_quotient_composition_exhaustive(n):
    for w in oracle.all_webs(n):
        subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(w.order, k)]
        for X in subsets:
            rc = roof(w, X).RF_circle
            for Y in subsets:
                if not Y & rc:
                    lhs = quotient_web(w, X | Y, allow_sources=True)
                    rhs = quotient_web(quotient_web(w, X, allow_sources=True), Y, allow_sources=True)
                    assert lhs == rhs, (w, X, Y)
