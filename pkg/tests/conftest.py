import pytest

from webcalc.core import Warp, make_web


@pytest.fixture
def chain():
    return make_web("axb", ["ax", "xb"], "a", "b")


@pytest.fixture
def diamond():
    return make_web("axyb", ["ax", "ay", "xb", "yb"], "a", "b")


@pytest.fixture
def crossing():
    """Y = (a,b,c,d) with Z = {(a,d), (s,b,t), (x,c,y)} drawn on one web."""
    w = make_web("abcdstxy", ["ab", "bc", "cd", "ad", "sb", "bt", "xc", "cy"], "asx", "dty")
    return w, Warp.of("abcd"), Warp.of("ad", "sbt", "xcy")
