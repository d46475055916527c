"""Seeded random and exhaustive instance generators.

Used by the randomized/exhaustive verification suites and the demos.
All randomness goes through an explicit numpy Generator for
reproducibility.
"""

from __future__ import annotations

import itertools

import numpy as np

from .circuit import Circuit, Relation
from .congruence import Equivalence
from .poset import Poset, poset_from_generators


def rng_from_seed(seed):
    return np.random.default_rng(seed)


def random_poset(rng, n, prefix="g", density=0.4):
    """A random n-element poset via a random DAG on an index order."""
    elements = [f"{prefix}{i}" for i in range(n)]
    pairs = [(elements[i], elements[j])
             for i in range(n) for j in range(i + 1, n)
             if rng.random() < density]
    return poset_from_generators(elements, pairs)


def random_circuit(rng, inputs, outputs, n_gates, prefix="g", density=0.4):
    """A random circuit over the given boundary sets."""
    P = random_poset(rng, n_gates, prefix=prefix, density=density)
    gates = P.elements
    lam = {a: gates[rng.integers(len(gates))] for a in inputs}
    mu = {b: gates[rng.integers(len(gates))] for b in outputs}
    return Circuit(P, inputs, outputs, lam, mu)


def random_relation(rng, inputs, outputs, density=0.5):
    pairs = {(a, b) for a in inputs for b in outputs if rng.random() < density}
    return Relation(inputs, outputs, pairs)


def all_relations(inputs, outputs):
    """Every relation over the given boundary, in a fixed order."""
    cells = [(a, b) for a in inputs for b in outputs]
    for bits in itertools.product([False, True], repeat=len(cells)):
        yield Relation(inputs, outputs,
                       {c for c, bit in zip(cells, bits) if bit})


def all_posets(n, prefix="e"):
    """All posets on n elements whose order respects the index order.

    Every finite poset is isomorphic to exactly the ones produced here
    (the index order is a linear extension), which is what exhaustive
    order-theoretic checks need.
    """
    elements = tuple(f"{prefix}{i}" for i in range(n))
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in itertools.product([False, True], repeat=len(upper)):
        matrix = np.eye(n, dtype=bool)
        for (i, j), bit in zip(upper, bits):
            if bit:
                matrix[i, j] = True
        # transitivity check without closure: closed iff M@M <= M
        if ((matrix @ matrix) & ~matrix).any():
            continue
        yield Poset(elements, matrix)


def all_partitions(elements):
    """Every partition of the element sequence (restricted growth strings)."""
    elements = list(elements)
    n = len(elements)
    if n == 0:
        yield Equivalence([])
        return

    def grow(i, assignment, nblocks):
        if i == n:
            blocks = [[] for _ in range(nblocks)]
            for e, k in zip(elements, assignment):
                blocks[k].append(e)
            yield Equivalence(blocks)
            return
        for k in range(nblocks + 1):
            yield from grow(i + 1, assignment + [k], max(nblocks, k + 1))

    yield from grow(0, [], 0)


def all_maps(domain, codomain):
    """Every total map from domain to codomain, as dicts."""
    domain = list(domain)
    for images in itertools.product(codomain, repeat=len(domain)):
        yield dict(zip(domain, images))


def random_elementary_morphism(rng, inputs, outputs, max_gates=6, max_moves=3):
    """A random valid morphism built by composing elementary rewrites.

    Starts from a random circuit and applies a random sequence of
    quotients, isolated-gate additions, wire additions, and boundary-map
    moves; the composite is a circuit morphism by construction.
    """
    from .congruence import quotient_circuit, quotient_map, is_compatible
    from .morphism import Morphism, compose, identity_morphism
    from .poset import covers

    n0 = int(rng.integers(1, max_gates - 1))
    source = random_circuit(rng, inputs, outputs, n0)
    f = identity_morphism(source)
    current = source
    for _ in range(int(rng.integers(1, max_moves + 1))):
        move = rng.choice(["quotient", "isolate", "wire", "shift"])
        if move == "quotient" and len(current.gates) >= 2:
            gates = current.gates.elements
            pairs = [(u, v) for i, u in enumerate(gates) for v in gates[i + 1:]
                     if (u, v) in covers(current.gates)
                     or (v, u) in covers(current.gates)
                     or current.gates.incomparable(u, v)]
            if not pairs:
                continue
            u, v = pairs[rng.integers(len(pairs))]
            theta = Equivalence.merging(gates, {u, v})
            if not is_compatible(current.gates, theta):
                continue
            nxt = quotient_circuit(current, theta)
            f = compose(quotient_map(current, theta, nxt), f)
            current = nxt
        elif move == "isolate" and len(current.gates) < max_gates:
            fresh = f"iso{len(current.gates)}"
            while fresh in current.gates:
                fresh = fresh + "x"
            elements = current.gates.elements + (fresh,)
            n = len(elements)
            matrix = np.eye(n, dtype=bool)
            matrix[:-1, :-1] = current.gates.matrix
            nxt = Circuit(Poset(elements, matrix), current.inputs,
                          current.outputs, current.lam, current.mu)
            f = compose(Morphism(current, nxt,
                                 {g: g for g in current.gates.elements}), f)
            current = nxt
        elif move == "wire" and len(current.gates) >= 2:
            gates = current.gates.elements
            options = [(u, v) for u in gates for v in gates
                       if u != v and not current.gates.leq(u, v)
                       and not current.gates.leq(v, u)]
            if not options:
                continue
            u, v = options[rng.integers(len(options))]
            matrix = current.gates.matrix.copy()
            i, j = current.gates.index(u), current.gates.index(v)
            matrix[i, j] = True
            closed = matrix.copy()
            while True:
                nxtm = closed | (closed @ closed)
                if (nxtm == closed).all():
                    break
                closed = nxtm
            nxt = Circuit(Poset(current.gates.elements, closed), current.inputs,
                          current.outputs, current.lam, current.mu)
            f = compose(Morphism(current, nxt,
                                 {g: g for g in current.gates.elements}), f)
            current = nxt
        elif move == "shift":
            lam = dict(current.lam)
            mu = dict(current.mu)
            for a in current.inputs:
                lower = sorted(current.gates.down_set(lam[a]))
                lam[a] = lower[rng.integers(len(lower))]
            for b in current.outputs:
                upper = sorted(current.gates.up_set(mu[b]))
                mu[b] = upper[rng.integers(len(upper))]
            nxt = Circuit(current.gates, current.inputs, current.outputs, lam, mu)
            f = compose(Morphism(current, nxt,
                                 {g: g for g in current.gates.elements}), f)
            current = nxt
    return f
