import pathlib

import pytest

import ordercircuits as oc

ROOT = pathlib.Path(__file__).resolve().parent.parent
DEMOS = ROOT / "demos"
DATA = pathlib.Path(__file__).resolve().parent / "data"


@pytest.fixture
def fourgate():
    """The four-gate running example: q<p, q<r<s, p incomparable to r, s."""
    P = oc.poset_from_generators(["p", "q", "r", "s"],
                                 [("q", "p"), ("q", "r"), ("r", "s")])
    return oc.Circuit(P, ["a1", "a2", "a3"], ["b1", "b2"],
                      {"a1": "p", "a2": "r", "a3": "s"},
                      {"b1": "p", "b2": "s"})


@pytest.fixture
def oneway_pair():
    """The strictly ordered pair: complete-bipartite four-gate circuit P,
    single-interaction-gate circuit Q, both with full connectivity."""
    P = oc.Circuit(
        oc.poset_from_generators(["a", "b", "c", "d"],
                                 [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]),
        ["a1", "a2"], ["b1", "b2"],
        {"a1": "a", "a2": "b"}, {"b1": "c", "b2": "d"})
    Q = oc.Circuit(oc.poset_from_generators(["q"], []),
                   ["a1", "a2"], ["b1", "b2"],
                   {"a1": "q", "a2": "q"}, {"b1": "q", "b2": "q"})
    return P, Q


@pytest.fixture
def equiv_pair():
    """Two 2-chains, syntactically equivalent but not isomorphic: the left
    one carries both boundary maps on its bottom gate, the right one has
    the output delayed to the top."""
    L = oc.Circuit(oc.poset_from_generators(["g1", "g2"], [("g1", "g2")]),
                   ["a1"], ["b1"], {"a1": "g1"}, {"b1": "g1"})
    R = oc.Circuit(oc.poset_from_generators(["h1", "h2"], [("h1", "h2")]),
                   ["a1"], ["b1"], {"a1": "h1"}, {"b1": "h2"})
    return L, R


@pytest.fixture
def diamond():
    """The pinned 3x3 relation: closure of {a1} is {a1,a2}, {a2} closed,
    diamond concept lattice, six-gate basic circuit."""
    return oc.Relation(
        ["a1", "a2", "a3"], ["b1", "b2", "b3"],
        [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2"),
         ("a2", "b3"), ("a3", "b2"), ("a3", "b3")])


@pytest.fixture
def fourbythree():
    """The 4x3 relation with closed input sets 1234, 12, 23, 234, 2."""
    return oc.Relation(
        ["1", "2", "3", "4"], ["x", "y", "z"],
        [("1", "x"), ("2", "x"), ("2", "y"), ("3", "y"),
         ("2", "z"), ("3", "z"), ("4", "z")])
