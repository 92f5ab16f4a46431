import random

import pytest

from webcalc import oracle
from webcalc.core import Warp, WebError, make_web
from webcalc.io import random_web
from webcalc.menger import (
    MengerStructure,
    certificate_problems,
    hindrance_witness,
    is_hindered,
    linkage,
    menger_certificate_check,
    menger_structure,
    safe_link,
)
from webcalc.separation import delete_web
from webcalc.waves import is_hindrance


@pytest.fixture
def fan():
    return make_web(["a1", "a2", "m", "b1", "b2"], [("a1", "m"), ("a2", "m"), ("m", "b1"), ("m", "b2")], ["a1", "a2"], ["b1", "b2"])


def test_chain_structure(chain):
    s = menger_structure(chain)
    assert s.nu == 1 and menger_certificate_check(chain, s)


def test_fan_separator_is_bottleneck(fan):
    s = menger_structure(fan)
    assert s.nu == 1 and s.separator == {"m"}


def test_corrupted_separator_rejected(diamond):
    s = menger_structure(diamond)
    (p,) = s.paths
    bad = MengerStructure(s.paths, frozenset({"a"}) if s.separator != {"a"} else frozenset({"b"}), {p: p[0]})
    assert not menger_certificate_check(diamond, bad)
    assert certificate_problems(diamond, bad)


def test_repeated_choice_rejected():
    w = make_web(["a1", "a2", "b1", "b2"], [("a1", "b1"), ("a2", "b2")], ["a1", "a2"], ["b1", "b2"])
    s = menger_structure(w)
    p, q = sorted(s.paths)
    bad = MengerStructure(s.paths, frozenset({p[0]}), {p: p[0], q: p[0]})
    assert not menger_certificate_check(w, bad)


def test_non_path_rejected(chain):
    bad = MengerStructure(Warp.of("ab"), frozenset("a"), {("a", "b"): "a"})
    assert not menger_certificate_check(chain, bad)


def test_linkage_and_hindrance(chain, fan):
    assert linkage(chain) == Warp.of("axb")
    assert linkage(fan) is None and is_hindered(fan)


def test_hindrance_witness(fan, chain):
    h = hindrance_witness(fan)
    assert h is not None and is_hindrance(fan, h)
    assert hindrance_witness(chain) is None


def test_safe_link(diamond):
    p = safe_link(diamond, "a")
    assert p[0] == "a" and p[-1] == "b"


def test_safe_link_errors(chain, fan):
    with pytest.raises(WebError):
        safe_link(chain, "x")
    with pytest.raises(WebError):
        safe_link(fan, "a1")


def test_random_webs_against_oracle():
    for seed in range(400):
        rng = random.Random(seed)
        w = random_web(rng.randint(2, 7), rng.uniform(0.1, 0.5), seed)
        s = menger_structure(w)
        assert s.nu == oracle.brute_nu(w) == oracle.brute_sigma(w)
        assert menger_certificate_check(w, s)
        assert is_hindered(w) == (oracle.brute_hindrance(w) is not None)
        h = hindrance_witness(w)
        assert (h is None) == (not is_hindered(w))
        if h is not None:
            assert is_hindrance(w, h)
        elif w.A:
            a = min(w.A)
            assert not is_hindered(delete_web(w, safe_link(w, a), trim=False))
