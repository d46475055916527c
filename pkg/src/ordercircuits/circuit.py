"""Circuits: a poset of gates with input/output maps, plus connectivity.

Inputs, outputs, and gates live in separate namespaces (keyed by role),
so an input may share its name with a gate without clashing.
"""

from __future__ import annotations

from types import MappingProxyType

from .errors import MismatchedBoundary, UnknownElement
from .poset import Poset, covers


class Circuit:
    """A finite circuit (gates, order, lambda, mu) from inputs A to outputs B."""

    __slots__ = ("gates", "inputs", "outputs", "lam", "mu")

    def __init__(self, gates, inputs, outputs, lam, mu):
        if not isinstance(gates, Poset):
            raise TypeError("gates must be a Poset")
        inputs = tuple(inputs)
        outputs = tuple(outputs)
        if len(set(inputs)) != len(inputs):
            raise ValueError("duplicate input identifiers")
        if len(set(outputs)) != len(outputs):
            raise ValueError("duplicate output identifiers")
        lam = dict(lam)
        mu = dict(mu)
        for a in inputs:
            if a not in lam:
                raise ValueError(f"lambda is not total: missing input {a!r}")
            if lam[a] not in gates:
                raise UnknownElement(f"lambda({a!r}) = {lam[a]!r} is not a gate")
        for b in outputs:
            if b not in mu:
                raise ValueError(f"mu is not total: missing output {b!r}")
            if mu[b] not in gates:
                raise UnknownElement(f"mu({b!r}) = {mu[b]!r} is not a gate")
        if set(lam) != set(inputs) or set(mu) != set(outputs):
            raise ValueError("lambda/mu mention undeclared inputs/outputs")
        self.gates = gates
        self.inputs = inputs
        self.outputs = outputs
        self.lam = MappingProxyType(lam)
        self.mu = MappingProxyType(mu)

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return (self.gates == other.gates and self.inputs == other.inputs
                and self.outputs == other.outputs and dict(self.lam) == dict(other.lam)
                and dict(self.mu) == dict(other.mu))

    def __hash__(self):
        return hash((self.gates, self.inputs, self.outputs,
                     tuple(sorted(self.lam.items())), tuple(sorted(self.mu.items()))))

    def __repr__(self):
        return (f"Circuit({len(self.gates)} gates, "
                f"{len(self.inputs)} inputs, {len(self.outputs)} outputs)")

    def same_boundary(self, other):
        return (set(self.inputs) == set(other.inputs)
                and set(self.outputs) == set(other.outputs))


class Relation:
    """A formal context: finite sets A, B and a set of pairs G <= A x B."""

    __slots__ = ("inputs", "outputs", "pairs")

    def __init__(self, inputs, outputs, pairs):
        inputs = tuple(inputs)
        outputs = tuple(outputs)
        if len(set(inputs)) != len(inputs) or len(set(outputs)) != len(outputs):
            raise ValueError("duplicate identifiers in relation carrier")
        pairs = frozenset((a, b) for a, b in pairs)
        for a, b in pairs:
            if a not in inputs:
                raise UnknownElement(f"pair mentions unknown input {a!r}")
            if b not in outputs:
                raise UnknownElement(f"pair mentions unknown output {b!r}")
        self.inputs = inputs
        self.outputs = outputs
        self.pairs = pairs

    def __contains__(self, pair):
        return pair in self.pairs

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return (self.inputs == other.inputs and self.outputs == other.outputs
                and self.pairs == other.pairs)

    def __hash__(self):
        return hash((self.inputs, self.outputs, self.pairs))

    def __repr__(self):
        return f"Relation({len(self.inputs)}x{len(self.outputs)}, {len(self.pairs)} pairs)"

    def children(self, a):
        """G(a): outputs related to input a."""
        if a not in self.inputs:
            raise UnknownElement(f"unknown input {a!r}")
        return frozenset(b for b in self.outputs if (a, b) in self.pairs)

    def parents(self, b):
        """G^-1(b): inputs related to output b."""
        if b not in self.outputs:
            raise UnknownElement(f"unknown output {b!r}")
        return frozenset(a for a in self.inputs if (a, b) in self.pairs)

    def same_boundary(self, other):
        return (set(self.inputs) == set(other.inputs)
                and set(self.outputs) == set(other.outputs))


def past_inputs(C, p):
    """p^-: the inputs a with lambda(a) <= p."""
    if p not in C.gates:
        raise UnknownElement(f"unknown gate {p!r}")
    return frozenset(a for a in C.inputs if C.gates.leq(C.lam[a], p))


def future_outputs(C, p):
    """p^+: the outputs b with p <= mu(b)."""
    if p not in C.gates:
        raise UnknownElement(f"unknown gate {p!r}")
    return frozenset(b for b in C.outputs if C.gates.leq(p, C.mu[b]))


def connectivity(C):
    """The relation G_C with a G_C b iff lambda(a) <= mu(b)."""
    pairs = {(a, b)
             for a in C.inputs for b in C.outputs
             if C.gates.leq(C.lam[a], C.mu[b])}
    return Relation(C.inputs, C.outputs, pairs)


def _gate_signature(C):
    """Per-gate invariants used to prune isomorphism search."""
    cov = covers(C.gates)
    indeg = {g: 0 for g in C.gates.elements}
    outdeg = {g: 0 for g in C.gates.elements}
    for p, q in cov:
        outdeg[p] += 1
        indeg[q] += 1
    sig = {}
    for g in C.gates.elements:
        sig[g] = (indeg[g], outdeg[g],
                  len(C.gates.down_set(g)), len(C.gates.up_set(g)),
                  frozenset(past_inputs(C, g)), frozenset(future_outputs(C, g)))
    return sig


def find_isomorphism(C1, C2):
    """The lexicographically least circuit isomorphism C1 -> C2, or None.

    An isomorphism is a bijective order isomorphism f with the equalities
    f(lambda1(a)) = lambda2(a) and f(mu1(b)) = mu2(b).
    """
    if not C1.same_boundary(C2):
        raise MismatchedBoundary("circuits have different input/output sets")
    if len(C1.gates) != len(C2.gates):
        return None
    sig1 = _gate_signature(C1)
    sig2 = _gate_signature(C2)
    forced = {}
    for a in C1.inputs:
        p, q = C1.lam[a], C2.lam[a]
        if forced.setdefault(p, q) != q:
            return None
    for b in C1.outputs:
        p, q = C1.mu[b], C2.mu[b]
        if forced.setdefault(p, q) != q:
            return None
    P1, P2 = C1.gates, C2.gates
    order1 = P1.elements
    assignment = {}
    used = set()

    def consistent(p, q):
        if sig1[p] != sig2[q]:
            return False
        for p2, q2 in assignment.items():
            if P1.leq(p, p2) != P2.leq(q, q2) or P1.leq(p2, p) != P2.leq(q2, q):
                return False
        return True

    def backtrack(i):
        if i == len(order1):
            return dict(assignment)
        p = order1[i]
        candidates = [forced[p]] if p in forced else P2.elements
        for q in candidates:
            if q in used or not consistent(p, q):
                continue
            assignment[p] = q
            used.add(q)
            result = backtrack(i + 1)
            if result is not None:
                return result
            del assignment[p]
            used.discard(q)
        return None

    mapping = backtrack(0)
    if mapping is None:
        return None
    from .morphism import Morphism
    return Morphism(C1, C2, mapping)
