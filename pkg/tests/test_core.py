import pytest

from webcalc.core import (
    Cyclowarp,
    FracturedWarp,
    Warp,
    Web,
    WebError,
    concat,
    decompose,
    extends,
    forward_extends,
    make_web,
    reverse_web,
    warp_arrow,
    warp_diamond,
    warp_fracture,
    warp_lim,
    warp_minus,
    warp_quotient,
    warp_restrict,
    warp_star,
    warp_uparrow,
)


class TestMakeWeb:
    def test_valid_web_unchanged(self):
        w = make_web("ab", ["ab"], "a", "b")
        assert w.edges == {("a", "b")} and not w.repairs

    def test_edge_into_a_dropped(self):
        w = make_web("ab", ["ab", "ba"], "a", "b")
        assert w.edges == {("a", "b")}
        assert any("(b, a)" in r for r in w.repairs)

    def test_dead_source_pruned(self):
        w = make_web("axb", ["xb"], "ax", "b")
        assert w.A == {"x"}

    def test_untrimmed_keeps_dead_source(self):
        w = make_web("axb", ["xb"], "ax", "b", trim=False)
        assert w.A == {"a", "x"}

    def test_strict_rejects_repairs(self):
        with pytest.raises(WebError):
            make_web("ab", ["ab", "ba"], "a", "b", strict=True)

    @pytest.mark.parametrize(
        "args",
        [
            ("ab", ["aq"], "a", "b"),
            ("ab", ["ab"], "q", "b"),
            (["a", "a"], [], "", ""),
        ],
    )
    def test_malformed_input(self, args):
        with pytest.raises(WebError):
            make_web(*args)

    def test_self_loop_and_duplicate(self):
        w = make_web("axb", [("x", "x"), ("a", "x"), ("a", "x"), ("x", "b")], "a", "b")
        assert w.edges == {("a", "x"), ("x", "b")}
        assert len(w.repairs) == 2

    def test_web_invariants_enforced_directly(self):
        with pytest.raises(WebError):
            Web(frozenset("ab"), frozenset({("b", "a")}), frozenset("a"), frozenset("b"))


class TestReverse:
    def test_chain(self, chain):
        r = reverse_web(chain)
        assert r.edges == {("b", "x"), ("x", "a")}
        assert r.A == {"b"} and r.B == {"a"}

    def test_involution(self, diamond):
        assert reverse_web(reverse_web(diamond)) == diamond

    def test_star(self):
        w = make_web(["a", "b1", "b2"], [("a", "b1"), ("a", "b2")], ["a"], ["b1", "b2"])
        r = reverse_web(w)
        assert r.edges == {("b1", "a"), ("b2", "a")} and r.A == {"b1", "b2"} and r.B == {"a"}


class TestPaths:
    def test_concat(self):
        assert concat(("a", "x"), ("x", "b")) == ("a", "x", "b")
        assert concat(("a",), ("a", "b")) == ("a", "b")

    def test_concat_shortcuts_revisit(self):
        assert concat(("a", "x", "y"), ("y", "x", "b")) == ("a", "x", "b")
        with pytest.raises(WebError):
            concat(("a", "x", "y"), ("y", "x", "b"), exact=True)

    def test_concat_mismatch(self):
        with pytest.raises(WebError):
            concat(("a", "x"), ("y", "b"))

    def test_decompose_paths_and_cycles(self):
        paths, cycles = decompose("abcxyz", [("a", "b"), ("x", "y"), ("y", "z"), ("z", "x")])
        assert paths == [("a", "b"), ("c",)]
        assert cycles == [("x", "y", "z")]

    def test_decompose_rejects_branching(self):
        with pytest.raises(WebError):
            decompose("abc", [("a", "b"), ("a", "c")])


class TestWarps:
    def test_disjointness(self):
        with pytest.raises(WebError):
            Warp.of("ax", "xb")

    def test_ends(self):
        w = Warp.of("axb", "c")
        assert w.ins == {"a", "c"} and w.ters == {"b", "c"} and w.iso == {"c"}

    def test_restrict_splits(self):
        assert warp_restrict(Warp.of("axb"), "ab") == Warp.of("a", "b")
        assert warp_restrict(Warp.of("axyb"), "xy") == Warp.of("xy")
        assert warp_restrict(Warp.of("axb"), "axb") == Warp.of("axb")

    def test_minus(self):
        assert warp_minus(Warp.of("axb"), "x") == Warp.of("a", "b")

    def test_fracture(self):
        assert warp_fracture(Warp.of("axb"), "x") == FracturedWarp(frozenset({("a", "x"), ("x", "b")}))
        assert warp_fracture(Warp.of("axb"), "") == FracturedWarp(frozenset({("a", "x", "b")}))
        assert warp_fracture(Warp.of("y"), "") == FracturedWarp(frozenset({("y",)}))

    def test_star_and_diamond(self):
        assert warp_star(Warp.of("ax"), Warp.of("xb")) == Warp.of("axb")
        assert warp_diamond(Warp.of("ax"), Warp.of("xb")) == Warp.of("axb")
        assert warp_star(Warp.of("ax"), Warp.of("yb")) == Warp.of("ax")
        assert warp_diamond(Warp.of("ax"), Warp.of("yb")) == Warp.of("ax", "yb")
        assert warp_star(Warp.of("ax"), Warp.of("xb", "cd")) == Warp.of("axb")
        assert warp_diamond(Warp.of("ax"), Warp.of("xb", "cd")) == Warp.of("axb", "cd")

    def test_star_junction_checked(self):
        with pytest.raises(WebError):
            warp_star(Warp.of("axb"), Warp.of("xc"))

    def test_arrow(self):
        assert warp_arrow(Warp.of("a"), Warp.of("ab")) == Warp.of("ab")
        u = Warp.of("axb")
        assert warp_arrow(u, u) == u

    def test_arrow_blocked(self):
        # the tail of (y,x,b) beyond x runs into the other u-path at b
        u = Warp.of("ax", "b")
        assert warp_arrow(u, Warp.of("yxb")) == u

    def test_uparrow(self):
        w1, w2 = Warp.of("a"), Warp.of("ax")
        assert warp_uparrow([w1]) == w1
        assert forward_extends(w2, w1) and warp_uparrow([w1, w2]) == w2
        assert warp_uparrow([Warp.of("a"), Warp.of("ab")]) == warp_arrow(Warp.of("a"), Warp.of("ab"))

    def test_lim(self):
        assert warp_lim([Warp.of("ab"), Warp.of("ab")]) == Warp.of("ab")
        assert warp_lim([Warp.of("ab"), Warp.of("a")]) == Warp.of("a")

    def test_extension_order(self):
        assert extends(Warp.of("axb"), Warp.of("ax"))
        assert forward_extends(Warp.of("axb"), Warp.of("ax"))
        assert extends(Warp.of("axb"), Warp.of("xb")) and not forward_extends(Warp.of("axb"), Warp.of("xb"))

    def test_cyclowarp(self):
        cw = Cyclowarp.from_edges("abcxy", [("a", "b"), ("x", "y"), ("y", "x")])
        assert cw.path_part == Warp.of("ab", "c")
        assert cw.cycles == {("x", "y")}


class TestQuotientOfWarp:
    def test_empty_set_is_identity(self, chain):
        w = Warp.of("axb")
        assert warp_quotient(w, (), chain) == w

    def test_chain_over_middle(self, chain):
        # a is strictly roofed by {x}; the edge (x,b) survives
        assert warp_quotient(Warp.of("axb"), "x", chain) == Warp.of("xb")

    def test_essential_part_added(self, chain):
        assert ("x",) in warp_quotient(Warp.of("a"), "x", chain)
