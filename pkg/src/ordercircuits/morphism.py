"""Circuit morphisms: validation, search, kernels, and the factorisation
of an arbitrary morphism into elementary rewrite stages."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, future_outputs, past_inputs
from .errors import BoundaryMismatch, BudgetExceeded, NotAMorphism
from .poset import Poset

DEFAULT_BUDGET = 5_000_000


class Morphism:
    """A total map between the gate sets of two circuits over the same A, B."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source, target, mapping):
        if not source.same_boundary(target):
            raise BoundaryMismatch("source and target have different input/output sets")
        mapping = dict(mapping)
        for g in source.gates.elements:
            if g not in mapping:
                raise ValueError(f"map is not total: missing gate {g!r}")
            if mapping[g] not in target.gates:
                raise ValueError(f"map sends {g!r} outside the target gate set")
        if set(mapping) != set(source.gates.elements):
            raise ValueError("map mentions gates outside the source")
        self.source = source
        self.target = target
        self.mapping = mapping

    def __call__(self, g):
        return self.mapping[g]

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.mapping == other.mapping)

    def __repr__(self):
        return f"Morphism({self.mapping!r})"

    def is_injective(self):
        return len(set(self.mapping.values())) == len(self.mapping)

    def is_surjective(self):
        return set(self.mapping.values()) == set(self.target.gates.elements)

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()


def identity_morphism(C):
    return Morphism(C, C, {g: g for g in C.gates.elements})


def compose(g, f):
    """The composite g o f (apply f first)."""
    if f.target.gates.elements != g.source.gates.elements:
        raise ValueError("composition mismatch: f.target differs from g.source")
    return Morphism(f.source, g.target, {p: g(f(p)) for p in f.source.gates.elements})


def check_morphism(f):
    """(True, "") if f is a circuit morphism, else (False, diagnostic).

    The diagnostic names the first violated clause (order / inputs /
    outputs) together with a witness.
    """
    P, Q = f.source, f.target
    for p in P.gates.elements:
        for q in P.gates.elements:
            if P.gates.leq(p, q) and not Q.gates.leq(f(p), f(q)):
                return False, (f"order: {p!r} <= {q!r} in source but "
                               f"{f(p)!r} <= {f(q)!r} fails in target")
    for a in P.inputs:
        if not Q.gates.leq(Q.lam[a], f(P.lam[a])):
            return False, (f"inputs: lambda_target({a!r}) <= f(lambda_source({a!r})) "
                           f"fails ({Q.lam[a]!r} vs {f(P.lam[a])!r})")
    for b in P.outputs:
        if not Q.gates.leq(f(P.mu[b]), Q.mu[b]):
            return False, (f"outputs: f(mu_source({b!r})) <= mu_target({b!r}) "
                           f"fails ({f(P.mu[b])!r} vs {Q.mu[b]!r})")
    return True, ""


def is_morphism(f):
    return check_morphism(f)[0]


def _require_morphism(f):
    ok, why = check_morphism(f)
    if not ok:
        raise NotAMorphism(why)


def is_embedding(f):
    """True iff the morphism also reflects order: f(p) <= f(p') => p <= p'."""
    _require_morphism(f)
    P, Q = f.source, f.target
    for p in P.gates.elements:
        for q in P.gates.elements:
            if Q.gates.leq(f(p), f(q)) and not P.gates.leq(p, q):
                return False
    return True


def kernel(f):
    """The partition of the source gates into fibres of f."""
    from .congruence import Equivalence
    fibres = {}
    for g in f.source.gates.elements:
        fibres.setdefault(f(g), []).append(g)
    return Equivalence(fibres.values())


def _search(P, Q, budget, find_all):
    """Backtracking search for circuit morphisms P -> Q.

    Gates of P are assigned in canonical order; candidate targets for p are
    restricted to gates q with p^- <= q^- and p^+ <= q^+ (morphisms can only
    grow these sets), then checked for order consistency against all
    previously assigned gates.  Trying targets in canonical order makes the
    first solution the lexicographically least one.
    """
    if not P.same_boundary(Q):
        raise BoundaryMismatch("circuits have different input/output sets")
    if budget is None:
        budget = DEFAULT_BUDGET
    past_P = {p: past_inputs(P, p) for p in P.gates.elements}
    fut_P = {p: future_outputs(P, p) for p in P.gates.elements}
    past_Q = {q: past_inputs(Q, q) for q in Q.gates.elements}
    fut_Q = {q: future_outputs(Q, q) for q in Q.gates.elements}
    candidates = {}
    for p in P.gates.elements:
        cands = [q for q in Q.gates.elements
                 if past_P[p] <= past_Q[q] and fut_P[p] <= fut_Q[q]]
        if not cands:
            return []
        candidates[p] = cands
    order = P.gates.elements
    assignment = {}
    solutions = []
    nodes = 0

    def backtrack(i):
        nonlocal nodes
        if i == len(order):
            solutions.append(dict(assignment))
            return not find_all
        p = order[i]
        for q in candidates[p]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"morphism search exceeded budget of {budget} nodes")
            ok = True
            for p2, q2 in assignment.items():
                if P.gates.leq(p2, p) and not Q.gates.leq(q2, q):
                    ok = False
                    break
                if P.gates.leq(p, p2) and not Q.gates.leq(q, q2):
                    ok = False
                    break
            if not ok:
                continue
            assignment[p] = q
            if backtrack(i + 1):
                return True
            del assignment[p]
        return False

    backtrack(0)
    return solutions


def find_morphism(P, Q, budget=None):
    """The lexicographically least circuit morphism P -> Q, or None.

    The search is complete; an explicit node budget (default generous for
    desk-scale circuits) turns pathological instances into BudgetExceeded
    rather than silent incompleteness.
    """
    solutions = _search(P, Q, budget, find_all=False)
    if not solutions:
        return None
    return Morphism(P, Q, solutions[0])


def morphism_exists(P, Q, budget=None):
    return find_morphism(P, Q, budget) is not None


def syntactically_equivalent(P, Q, budget=None):
    """True iff morphisms exist in both directions."""
    return morphism_exists(P, Q, budget) and morphism_exists(Q, P, budget)


def endomorphisms(C, budget=None):
    """All circuit endomorphisms of C, in lexicographic canonical order."""
    return [Morphism(C, C, m) for m in _search(C, C, budget, find_all=True)]


@dataclass
class FactorisationResult:
    """A morphism split into its four elementary rewrite stages.

    stages[0]: quotient onto source/ker f;
    stages[1]: inclusion that adds the gates of target missed by f, isolated;
    stages[2]: bijection onto the re-wired target (order enlarged);
    stages[3]: identity on gates, advancing inputs and delaying outputs.
    """

    stages: tuple
    intermediates: tuple

    def composite(self):
        f = self.stages[0]
        for g in self.stages[1:]:
            f = compose(g, f)
        return f


def _fresh_name(name, taken):
    while name in taken:
        name = name + "_x"
    return name


def factorise(f):
    """Factor a circuit morphism into the four stages of the rewrite theorem.

    Stage construction follows the constructive proof: quotient by the
    kernel, adjoin the unreached target gates as isolated elements, map
    bijectively onto the target's gate set carrying the transported
    boundary maps, then relax the boundary maps to the target's own.
    """
    _require_morphism(f)
    from .congruence import quotient_circuit, quotient_map
    P, Q = f.source, f.target

    ker = kernel(f)
    C1 = quotient_circuit(P, ker)
    stage1 = quotient_map(P, ker, C1)
    block_name = {g: stage1(g) for g in P.gates.elements}

    image = {f(g) for g in P.gates.elements}
    missing = [q for q in Q.gates.elements if q not in image]
    taken = set(C1.gates.elements)
    added = {}
    for q in missing:
        name = _fresh_name(q, taken)
        taken.add(name)
        added[q] = name
    n1 = len(C1.gates)
    elements2 = C1.gates.elements + tuple(added[q] for q in missing)
    n2 = len(elements2)
    matrix2 = np.eye(n2, dtype=bool)
    matrix2[:n1, :n1] = C1.gates.matrix
    C2 = Circuit(Poset(elements2, matrix2), C1.inputs, C1.outputs, C1.lam, C1.mu)
    stage2 = Morphism(C1, C2, {g: g for g in C1.gates.elements})

    # Q with the boundary maps transported along f.
    Qtilde = Circuit(Q.gates, Q.inputs, Q.outputs,
                     {a: f(P.lam[a]) for a in P.inputs},
                     {b: f(P.mu[b]) for b in P.outputs})
    map3 = {}
    block_target = {}  # block gate of C1 -> target gate under [f]
    for g in P.gates.elements:
        block_target[block_name[g]] = f(g)
    for g in C2.gates.elements:
        if g in block_target:
            map3[g] = block_target[g]
        else:
            # an adjoined gate named after its target gate
            original = next(q for q, name in added.items() if name == g)
            map3[g] = original
    stage3 = Morphism(C2, Qtilde, map3)

    stage4 = Morphism(Qtilde, Q, {q: q for q in Q.gates.elements})

    return FactorisationResult(stages=(stage1, stage2, stage3, stage4),
                               intermediates=(C1, C2, Qtilde))


def _boundary_transported(f):
    """True iff lambda_target = f o lambda_source and mu_target = f o mu_source."""
    P, Q = f.source, f.target
    return (all(Q.lam[a] == f(P.lam[a]) for a in P.inputs)
            and all(Q.mu[b] == f(P.mu[b]) for b in P.outputs))


def _order_reflected(f):
    P, Q = f.source, f.target
    return all(P.gates.leq(p, q) == Q.gates.leq(f(p), f(q))
               for p in P.gates.elements for q in P.gates.elements)


def classify_elementary(f):
    """Which elementary rewrite types (up to gate renaming) f instantiates.

    Possible flags: quotient, adds_isolated_gates, adds_wires,
    advances_delays, embedding, isomorphism.
    """
    _require_morphism(f)
    from .congruence import quotient_circuit, quotient_map
    P, Q = f.source, f.target
    flags = set()
    injective = f.is_injective()
    surjective = f.is_surjective()
    bijective = injective and surjective
    transported = _boundary_transported(f)
    reflected = _order_reflected(f)

    if surjective and transported:
        # up to renaming, the target must be exactly the quotient by ker f
        ker = kernel(f)
        C1 = quotient_circuit(P, ker)
        pi = quotient_map(P, ker, C1)
        name_to_q = {pi(g): f(g) for g in P.gates.elements}
        iso_ok = all(
            C1.gates.leq(x, y) == Q.gates.leq(name_to_q[x], name_to_q[y])
            for x in C1.gates.elements for y in C1.gates.elements)
        if iso_ok:
            flags.add("quotient")

    if injective and transported and reflected:
        extra = [q for q in Q.gates.elements if q not in set(f.mapping.values())]
        strict = Q.gates.strict_matrix()
        isolated = all(not strict[Q.gates.index(q), :].any()
                       and not strict[:, Q.gates.index(q)].any() for q in extra)
        if isolated:
            flags.add("adds_isolated_gates")

    if bijective and transported:
        flags.add("adds_wires")

    if bijective and reflected:
        flags.add("advances_delays")

    if is_embedding(f):
        flags.add("embedding")

    if bijective and reflected and transported:
        flags.add("isomorphism")

    return flags
