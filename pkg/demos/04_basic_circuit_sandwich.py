"""The minimal realisation of a relation, and the sandwich theorem:
a circuit has connectivity G exactly when it sits between the basic
circuit and the concept lattice of G.

Run from the repository root:  python3 demos/04_basic_circuit_sandwich.py
"""

import ordercircuits as oc

G = oc.Relation(
    ["a1", "a2", "a3"], ["b1", "b2", "b3"],
    [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2"),
     ("a2", "b3"), ("a3", "b2"), ("a3", "b3")])

B = oc.basic_circuit(G)
L = oc.concept_lattice(G)
print("basic circuit gates:  ", B.gates.elements)
print("concept lattice gates:", L.gates.elements)
print("both realise G?",
      oc.connectivity(B).pairs == G.pairs == oc.connectivity(L).pairs)

# The canonical morphism from the minimal to the maximal realisation.
f = oc.canonical_morphism_from_basic(G, L)
print("B -> L:", f.mapping)
print("L -> B exists?", oc.morphism_exists(L, B))

# Its kernel is a compatible congruence, and quotienting by it turns the
# basic circuit into (a copy of) the lattice.
theta = oc.kernel(f)
print("kernel blocks:", sorted(sorted(b) for b in theta.blocks))
Q = oc.quotient_circuit(B, theta)
print("quotient isomorphic to lattice?",
      oc.find_isomorphism(Q, L) is not None)

# The sandwich: for any test circuit P over the same boundary,
#   connectivity(P) = G  iff  B maps into P and P maps into L.
from ordercircuits.instances import random_circuit, rng_from_seed
rng = rng_from_seed(7)
for P in (B, L, random_circuit(rng, G.inputs, G.outputs, 4)):
    print("sandwich biconditional holds?", oc.verify_sandwich(G, P))
