"""Equivalence relations on gate sets, quotient orders and circuits,
compatibility testing, and decomposition into atomic merge steps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit
from .errors import InvalidPartition, NotCompatible, OrderCircuitError
from .poset import Poset, covers


class Equivalence:
    """A partition of a gate set into disjoint nonempty blocks."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blocks = tuple(sorted((frozenset(b) for b in blocks),
                              key=lambda b: sorted(b)))
        seen = set()
        for b in blocks:
            if not b:
                raise InvalidPartition("empty block")
            if seen & b:
                raise InvalidPartition(f"blocks overlap on {sorted(seen & b)}")
            seen |= b
        self.blocks = blocks

    @classmethod
    def discrete(cls, elements):
        return cls([{e} for e in elements])

    @classmethod
    def merging(cls, elements, *merged):
        """The partition merging each given set, all other elements singleton."""
        merged = [frozenset(m) for m in merged]
        rest = set(elements)
        for m in merged:
            rest -= m
        return cls(list(merged) + [{e} for e in rest])

    def carrier(self):
        return frozenset().union(*self.blocks) if self.blocks else frozenset()

    def block_of(self, x):
        for b in self.blocks:
            if x in b:
                return b
        raise InvalidPartition(f"{x!r} is not covered by any block")

    def is_discrete(self):
        return all(len(b) == 1 for b in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, Equivalence):
            return NotImplemented
        return set(self.blocks) == set(other.blocks)

    def __hash__(self):
        return hash(frozenset(self.blocks))

    def __repr__(self):
        return "Equivalence(%s)" % ", ".join("{%s}" % ",".join(sorted(b))
                                             for b in self.blocks)


def _check_partition(P, theta):
    if theta.carrier() != set(P.elements):
        raise InvalidPartition("blocks do not partition the carrier exactly")


def _canonical_blocks(P, theta):
    """Blocks ordered by least member in P's canonical element order."""
    pos = {e: i for i, e in enumerate(P.elements)}
    return sorted(theta.blocks, key=lambda b: min(pos[x] for x in b))


def block_name(P, block):
    """Deterministic, human-readable name: members joined by '+'."""
    pos = {e: i for i, e in enumerate(P.elements)}
    return "+".join(sorted(block, key=lambda x: pos[x]))


@dataclass
class QuotientPreorder:
    """The raw quotient relation: reflexive, but possibly neither
    antisymmetric nor transitive."""

    blocks: tuple
    names: tuple
    matrix: np.ndarray

    def holds(self, b1, b2):
        return bool(self.matrix[self.blocks.index(b1), self.blocks.index(b2)])


def quotient_preorder(P, theta):
    """[p] <=_theta [q] iff some p' in [p], q' in [q] have p' <= q'.

    No closure is applied; the result exhibits exactly where antisymmetry
    or transitivity fail for non-compatible partitions.
    """
    _check_partition(P, theta)
    blocks = tuple(_canonical_blocks(P, theta))
    names = tuple(block_name(P, b) for b in blocks)
    k = len(blocks)
    idx = [[P.index(x) for x in b] for b in blocks]
    matrix = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(k):
            matrix[i, j] = any(P.matrix[x, y] for x in idx[i] for y in idx[j])
    np.fill_diagonal(matrix, True)
    return QuotientPreorder(blocks, names, matrix)


def _closed_quotient(P, theta):
    pre = quotient_preorder(P, theta)
    k = len(pre.blocks)
    closed = pre.matrix.copy()
    while True:
        nxt = closed | (closed @ closed)
        if (nxt == closed).all():
            break
        closed = nxt
    sym = closed & closed.T & ~np.eye(k, dtype=bool)
    witness = None
    if sym.any():
        i, j = map(int, np.argwhere(sym)[0])
        witness = (pre.blocks[i], pre.blocks[j])
    return pre, closed, witness


def is_compatible(P, theta):
    """True iff the transitive closure of the quotient preorder is
    antisymmetric (so the quotient is again a partial order)."""
    _, _, witness = _closed_quotient(P, theta)
    return witness is None


def quotient_poset(P, theta):
    """The quotient partial order, with '+'-joined block names.

    Raises NotCompatible (with an antisymmetry witness) otherwise.
    """
    pre, closed, witness = _closed_quotient(P, theta)
    if witness is not None:
        b1, b2 = witness
        raise NotCompatible(
            f"blocks {block_name(P, b1)!r} and {block_name(P, b2)!r} become "
            "order-equivalent in the quotient", witness=witness)
    return Poset(pre.names, closed)


def quotient_circuit(C, theta):
    """The quotient circuit (P/theta, closure, pi o lambda, pi o mu)."""
    Q = quotient_poset(C.gates, theta)
    name = {}
    for b in theta.blocks:
        n = block_name(C.gates, b)
        for x in b:
            name[x] = n
    return Circuit(Q, C.inputs, C.outputs,
                   {a: name[C.lam[a]] for a in C.inputs},
                   {b: name[C.mu[b]] for b in C.outputs})


def quotient_map(C, theta, target=None):
    """The quotient map pi_theta as a Morphism into quotient_circuit(C, theta)."""
    from .morphism import Morphism
    if target is None:
        target = quotient_circuit(C, theta)
    name = {}
    for b in theta.blocks:
        n = block_name(C.gates, b)
        for x in b:
            name[x] = n
    return Morphism(C, target, name)


def atomic_decomposition(P, theta):
    """A sequence of atomic merges realising the quotient by theta.

    Each returned Equivalence lives on the poset obtained by applying all
    previous steps (via quotient_poset) and merges exactly two elements
    that cover each other or are incomparable.  The number of steps is
    |P| - |blocks(theta)|.
    """
    _check_partition(P, theta)
    if not is_compatible(P, theta):
        raise NotCompatible("partition is not a compatible congruence")
    steps = []
    current = P
    # target block of each current element: blocks are stable under merging
    # because merged elements always come from the same block
    target_block = {}
    for b in theta.blocks:
        n = frozenset(b)
        for x in b:
            target_block[x] = n

    def remaining_merges():
        groups = {}
        for e in current.elements:
            groups.setdefault(target_block[e], []).append(e)
        return sum(len(g) - 1 for g in groups.values())

    while remaining_merges() > 0:
        groups = {}
        for e in current.elements:
            groups.setdefault(target_block[e], []).append(e)
        cov = covers(current)
        step = None
        for grp in groups.values():
            if len(grp) < 2:
                continue
            pos = {e: i for i, e in enumerate(current.elements)}
            grp = sorted(grp, key=lambda e: pos[e])
            for i in range(len(grp)):
                for j in range(i + 1, len(grp)):
                    u, v = grp[i], grp[j]
                    atomic = ((u, v) in cov or (v, u) in cov
                              or current.incomparable(u, v))
                    if not atomic:
                        continue
                    candidate = Equivalence.merging(current.elements, {u, v})
                    if is_compatible(current, candidate):
                        step = (candidate, u, v)
                        break
                if step:
                    break
            if step:
                break
        if step is None:
            raise OrderCircuitError(
                "internal invariant violated: no atomic merge step available")
        candidate, u, v = step
        steps.append(candidate)
        merged_name = block_name(current, {u, v})
        blk = target_block[u]
        current = quotient_poset(current, candidate)
        for e in (u, v):
            del target_block[e]
        target_block[merged_name] = blk
    return steps


def apply_decomposition(P, steps):
    """Fold quotient_poset over a sequence of decomposition steps."""
    current = P
    for theta in steps:
        current = quotient_poset(current, theta)
    return current
