"""Finite partial orders over opaque string identifiers.

The order is stored as a dense boolean matrix over a canonical element
sequence (input order), kept reflexively and transitively closed.  All
values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import numpy as np

from .errors import CycleError, EmptyPoset, UnknownElement


class Poset:
    """A finite partial order.

    Attributes:
        elements: canonical tuple of distinct identifiers.
        matrix:   read-only boolean matrix; matrix[i, j] iff elements[i] <= elements[j].
    """

    __slots__ = ("elements", "matrix", "_index")

    def __init__(self, elements, matrix):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise ValueError("duplicate elements in poset carrier")
        matrix = np.array(matrix, dtype=bool)
        n = len(elements)
        if matrix.shape != (n, n):
            raise ValueError("order matrix shape does not match carrier")
        if n and not matrix.diagonal().all():
            raise ValueError("order matrix is not reflexive")
        closed = matrix | (matrix @ matrix)
        if (closed != matrix).any():
            raise ValueError("order matrix is not transitively closed")
        sym = matrix & matrix.T & ~np.eye(n, dtype=bool)
        if sym.any():
            i, j = map(int, np.argwhere(sym)[0])
            raise CycleError([elements[i], elements[j], elements[i]])
        matrix.setflags(write=False)
        self.elements = elements
        self.matrix = matrix
        self._index = {e: i for i, e in enumerate(elements)}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in self._index

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.elements, self.matrix.tobytes()))

    def __repr__(self):
        return f"Poset({list(self.elements)!r}, {len(self)} elements)"

    def index(self, p):
        try:
            return self._index[p]
        except KeyError:
            raise UnknownElement(f"unknown element {p!r}") from None

    def leq(self, p, q):
        return bool(self.matrix[self.index(p), self.index(q)])

    def lt(self, p, q):
        return p != q and self.leq(p, q)

    def incomparable(self, p, q):
        return not self.leq(p, q) and not self.leq(q, p)

    def down_set(self, p):
        """All q with q <= p."""
        i = self.index(p)
        return {self.elements[j] for j in np.flatnonzero(self.matrix[:, i])}

    def up_set(self, p):
        """All q with p <= q."""
        i = self.index(p)
        return {self.elements[j] for j in np.flatnonzero(self.matrix[i, :])}

    def strict_matrix(self):
        return self.matrix & ~np.eye(len(self), dtype=bool)


def _transitive_closure(matrix):
    """Reflexive-transitive closure by boolean matrix powering."""
    n = len(matrix)
    closed = matrix | np.eye(n, dtype=bool)
    while True:
        nxt = closed | (closed @ closed)
        if (nxt == closed).all():
            return closed
        closed = nxt


def _find_cycle(elements, index, pairs, start, goal):
    """A generator path start -> ... -> goal, as element names (BFS)."""
    succ = {e: [] for e in elements}
    for a, b in pairs:
        succ[a].append(b)
    prev = {start: None}
    queue = [start]
    while queue:
        cur = queue.pop(0)
        if cur == goal:
            path = []
            while cur is not None:
                path.append(cur)
                cur = prev[cur]
            return path[::-1]
        for nxt in succ[cur]:
            if nxt not in prev:
                prev[nxt] = cur
                queue.append(nxt)
    return [start, goal]  # unreachable for a genuine antisymmetry violation


def poset_from_generators(elements, pairs):
    """Build the poset generated by `pairs` (each meaning first < second).

    Raises CycleError (with a witnessing cycle) if the closure is not
    antisymmetric, and UnknownElement if a pair mentions a missing id.
    """
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("duplicate elements in poset carrier")
    n = len(elements)
    gen = np.zeros((n, n), dtype=bool)
    pairs = list(pairs)
    for a, b in pairs:
        if a not in index:
            raise UnknownElement(f"unknown element {a!r} in order pair")
        if b not in index:
            raise UnknownElement(f"unknown element {b!r} in order pair")
        gen[index[a], index[b]] = True
    closed = _transitive_closure(gen)
    sym = closed & closed.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = map(int, np.argwhere(sym)[0])
        forward = _find_cycle(elements, index, pairs, elements[i], elements[j])
        back = _find_cycle(elements, index, pairs, elements[j], elements[i])
        raise CycleError(forward + back[1:])
    return Poset(elements, closed)


def covers(P):
    """The Hasse edges of P: pairs (p, q) with p < q and nothing between."""
    strict = P.strict_matrix()
    reduced = strict & ~(strict @ strict)
    return {(P.elements[i], P.elements[j]) for i, j in np.argwhere(reduced)}


def is_convex(P, S):
    """True iff no element outside S lies between two elements of S."""
    idx = sorted(P.index(s) for s in S)
    inside = np.zeros(len(P), dtype=bool)
    inside[idx] = True
    for i in idx:
        for j in idx:
            if P.matrix[i, j]:
                between = P.matrix[i, :] & P.matrix[:, j]
                if (between & ~inside).any():
                    return False
    return True


def join_of(P, S):
    """Least upper bound of S in P, or None."""
    idx = [P.index(s) for s in S]
    ub = np.ones(len(P), dtype=bool)
    for i in idx:
        ub &= P.matrix[i, :]
    candidates = np.flatnonzero(ub)
    for c in candidates:
        if all(P.matrix[c, d] for d in candidates):
            return P.elements[c]
    return None


def meet_of(P, S):
    """Greatest lower bound of S in P, or None."""
    idx = [P.index(s) for s in S]
    lb = np.ones(len(P), dtype=bool)
    for i in idx:
        lb &= P.matrix[:, i]
    candidates = np.flatnonzero(lb)
    for c in candidates:
        if all(P.matrix[d, c] for d in candidates):
            return P.elements[c]
    return None


def joins_and_meets(P, S):
    """(join, meet) of S if both exist, else None.

    For S = {} this asks for a global minimum and maximum.
    """
    j = join_of(P, S)
    m = meet_of(P, S)
    if j is None or m is None:
        return None
    return (j, m)


def is_lattice(P):
    """True iff every pair of elements has a join and a meet."""
    if len(P) == 0:
        raise EmptyPoset("is_lattice requires a nonempty poset")
    for p in P.elements:
        for q in P.elements:
            if join_of(P, (p, q)) is None or meet_of(P, (p, q)) is None:
                return False
    return True
