"""From a bare input/output relation to its concept lattice: closures,
concepts, and why the lattice is the canonical maximal realisation.

Run from the repository root:  python3 demos/03_concept_lattice.py
"""

import ordercircuits as oc
from ordercircuits import textio

G = oc.Relation(
    ["1", "2", "3", "4"], ["x", "y", "z"],
    [("1", "x"), ("2", "x"), ("2", "y"), ("3", "y"),
     ("2", "z"), ("3", "z"), ("4", "z")])

# Galois closure on the input side: which inputs are indistinguishable
# from the outputs' point of view once you fix a set?
for alpha in ({"1"}, {"3"}, {"1", "4"}):
    print(f"closure{sorted(alpha)} = {sorted(oc.closure_inputs(G, alpha))}")

print("closed input sets:",
      [sorted(s) for s in oc.closed_input_sets(G)])

# Each closed set pairs with its common children to form a concept.
for c in oc.concepts(G):
    print(f"  extent {sorted(c.extent)} / intent {sorted(c.intent)}")

L = oc.concept_lattice(G)
print("lattice gates:", L.gates.elements)
print("is a lattice?", oc.is_lattice(L.gates))
print("realises G?", oc.connectivity(L).pairs == G.pairs)
print("dense realisation?", oc.is_dense_realisation(L, G))

# The lattice is rigid (only the identity endomorphism) and terminal:
# a circuit maps into L exactly when its connectivity fits inside G.
print("endomorphisms of L:", len(oc.endomorphisms(L)))

sub = oc.Circuit(oc.poset_from_generators(["g", "h"], [("g", "h")]),
                 G.inputs, G.outputs,
                 {a: "g" for a in G.inputs}, {b: "h" for b in G.outputs})
print("full-connectivity circuit maps into L?", oc.morphism_exists(sub, L))

print()
print(textio.to_dot(L))
