"""Independent brute-force oracles.

These deliberately avoid the library's search and lattice machinery: maps
are enumerated exhaustively and bounds found by scanning, so they can
vouch for the cleverer implementations.
"""

import itertools

import ordercircuits as oc


def brute_morphisms(P, Q):
    """All circuit morphisms P -> Q by enumerating every gate map."""
    gates_p = P.gates.elements
    gates_q = Q.gates.elements
    found = []
    for images in itertools.product(gates_q, repeat=len(gates_p)):
        mapping = dict(zip(gates_p, images))
        ok = all(Q.gates.leq(mapping[p], mapping[q])
                 for p in gates_p for q in gates_p if P.gates.leq(p, q))
        if ok:
            ok = all(Q.gates.leq(Q.lam[a], mapping[P.lam[a]]) for a in P.inputs)
        if ok:
            ok = all(Q.gates.leq(mapping[P.mu[b]], Q.mu[b]) for b in P.outputs)
        if ok:
            found.append(mapping)
    return found


def brute_bounds(P, S):
    """(join, meet) for S by scanning every element, None entries if absent."""
    uppers = [u for u in P.elements if all(P.leq(s, u) for s in S)]
    lowers = [l for l in P.elements if all(P.leq(l, s) for s in S)]
    join = None
    for u in uppers:
        if all(P.leq(u, v) for v in uppers):
            join = u
    meet = None
    for l in lowers:
        if all(P.leq(v, l) for v in lowers):
            meet = l
    return join, meet


def brute_closed_input_sets(G):
    """All fixpoints of the input-side closure, by trying every subset."""
    closed = []
    for r in range(len(G.inputs) + 1):
        for combo in itertools.combinations(G.inputs, r):
            alpha = frozenset(combo)
            if oc.closure_inputs(G, alpha) == alpha:
                closed.append(alpha)
    return set(closed)


def brute_is_lattice(P):
    for p in P.elements:
        for q in P.elements:
            j, m = brute_bounds(P, (p, q))
            if j is None or m is None:
                return False
    return True


def brute_order_preserving_kernel_exists(P, theta):
    """Whether theta is the kernel of some order-preserving map out of P,
    searching every poset on k = |blocks| elements and every map onto it."""
    from ordercircuits.instances import all_posets
    k = len(theta.blocks)
    blocks = list(theta.blocks)
    for Q in all_posets(k):
        for perm in itertools.permutations(range(k)):
            mapping = {}
            for bi, b in enumerate(blocks):
                for x in b:
                    mapping[x] = Q.elements[perm[bi]]
            ok = all(Q.leq(mapping[p], mapping[q])
                     for p in P.elements for q in P.elements if P.leq(p, q))
            if ok:
                return True
    return False
