import pytest

import ordercircuits as oc
from ordercircuits.instances import random_circuit, rng_from_seed


def single_gate_circuit():
    P = oc.poset_from_generators(["g"], [])
    return oc.Circuit(P, ["a1", "a2"], ["b1"],
                      {"a1": "g", "a2": "g"}, {"b1": "g"})


def test_past_and_future(fourgate):
    assert oc.past_inputs(fourgate, "s") == {"a2", "a3"}
    assert oc.future_outputs(fourgate, "s") == {"b2"}
    assert oc.past_inputs(fourgate, "q") == set()
    assert oc.future_outputs(fourgate, "q") == {"b1", "b2"}


def test_past_future_single_gate():
    C = single_gate_circuit()
    assert oc.past_inputs(C, "g") == set(C.inputs)
    assert oc.future_outputs(C, "g") == set(C.outputs)


def test_past_unknown_gate(fourgate):
    with pytest.raises(oc.UnknownElement):
        oc.past_inputs(fourgate, "zz")


def test_connectivity(fourgate):
    G = oc.connectivity(fourgate)
    assert G.pairs == {("a1", "b1"), ("a2", "b2"), ("a3", "b2")}


def test_connectivity_single_gate_full():
    C = single_gate_circuit()
    assert oc.connectivity(C).pairs == {(a, b) for a in C.inputs for b in C.outputs}


def test_connectivity_no_outputs():
    P = oc.poset_from_generators(["g"], [])
    C = oc.Circuit(P, ["a1"], [], {"a1": "g"}, {})
    assert oc.connectivity(C).pairs == set()


def test_connectivity_membership_equivalences(fourgate):
    G = oc.connectivity(fourgate)
    for a in fourgate.inputs:
        for b in fourgate.outputs:
            in_g = (a, b) in G.pairs
            assert in_g == (a in oc.past_inputs(fourgate, fourgate.mu[b]))
            assert in_g == (b in oc.future_outputs(fourgate, fourgate.lam[a]))


def test_isomorphism_identity(fourgate):
    f = oc.find_isomorphism(fourgate, fourgate)
    assert f.mapping == {g: g for g in fourgate.gates.elements}


def test_isomorphism_renaming(fourgate):
    renaming = {"p": "g1", "q": "g2", "r": "g3", "s": "g4"}
    P2 = oc.poset_from_generators(
        [renaming[g] for g in fourgate.gates.elements],
        [(renaming[p], renaming[q]) for p, q in oc.covers(fourgate.gates)])
    C2 = oc.Circuit(P2, fourgate.inputs, fourgate.outputs,
                    {a: renaming[fourgate.lam[a]] for a in fourgate.inputs},
                    {b: renaming[fourgate.mu[b]] for b in fourgate.outputs})
    f = oc.find_isomorphism(fourgate, C2)
    assert f.mapping == renaming
    g = oc.find_isomorphism(C2, fourgate)
    assert g.mapping == {v: k for k, v in renaming.items()}


def test_isomorphism_absent_for_equivalent_pair(equiv_pair):
    L, R = equiv_pair
    assert oc.find_isomorphism(L, R) is None
    assert oc.find_isomorphism(R, L) is None


def test_isomorphism_boundary_mismatch(fourgate):
    other = oc.Circuit(fourgate.gates, ["w"], fourgate.outputs, {"w": "p"}, dict(fourgate.mu))
    with pytest.raises(oc.MismatchedBoundary):
        oc.find_isomorphism(fourgate, other)


def test_isomorphism_symmetric_random():
    rng = rng_from_seed(11)
    for _ in range(20):
        C1 = random_circuit(rng, ("a1", "a2"), ("b1",), 4)
        C2 = random_circuit(rng, ("a1", "a2"), ("b1",), 4)
        f = oc.find_isomorphism(C1, C2)
        g = oc.find_isomorphism(C2, C1)
        assert (f is None) == (g is None)
        if f is not None:
            assert {v: k for k, v in f.mapping.items()} == \
                oc.find_isomorphism(C2, C1).mapping or \
                all(g(f(p)) == p for p in C1.gates.elements)


def test_morphisms_grow_past_and_future(oneway_pair):
    P, Q = oneway_pair
    f = oc.find_morphism(P, Q)
    for p in P.gates.elements:
        assert oc.past_inputs(P, p) <= oc.past_inputs(Q, f(p))
        assert oc.future_outputs(P, p) <= oc.future_outputs(Q, f(p))


def test_morphism_implies_connectivity_inclusion():
    rng = rng_from_seed(12)
    hits = 0
    for _ in range(40):
        P = random_circuit(rng, ("a1", "a2"), ("b1", "b2"), 3)
        Q = random_circuit(rng, ("a1", "a2"), ("b1", "b2"), 3)
        if oc.find_morphism(P, Q) is not None:
            hits += 1
            assert oc.connectivity(P).pairs <= oc.connectivity(Q).pairs
    assert hits > 0


def test_duplicate_inputs_rejected():
    P = oc.poset_from_generators(["g"], [])
    with pytest.raises(ValueError):
        oc.Circuit(P, ["a", "a"], [], {"a": "g"}, {})


def test_lambda_must_be_total():
    P = oc.poset_from_generators(["g"], [])
    with pytest.raises(ValueError):
        oc.Circuit(P, ["a"], [], {}, {})
