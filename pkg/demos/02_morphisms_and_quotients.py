"""Morphisms between circuits, quotients by congruences, and the
four-stage factorisation of an arbitrary morphism.

Run from the repository root:  python3 demos/02_morphisms_and_quotients.py
"""

import ordercircuits as oc

# A four-gate circuit with full input/output connectivity...
P = oc.Circuit(
    oc.poset_from_generators(["a", "b", "c", "d"],
                             [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]),
    ["a1", "a2"], ["b1", "b2"],
    {"a1": "a", "a2": "b"}, {"b1": "c", "b2": "d"})

# ...and the one-gate circuit with the same connectivity.
Q = oc.Circuit(oc.poset_from_generators(["q"], []),
               ["a1", "a2"], ["b1", "b2"],
               {"a1": "q", "a2": "q"}, {"b1": "q", "b2": "q"})

f = oc.find_morphism(P, Q)
print("P -> Q:", f.mapping)
print("Q -> P:", oc.find_morphism(Q, P))   # None: strictly one-way
print("equivalent?", oc.syntactically_equivalent(P, Q))

# Quotients: merge the two bottom gates of P.
theta = oc.Equivalence.merging(P.gates.elements, {"a", "b"})
print("compatible?", oc.is_compatible(P.gates, theta))
C = oc.quotient_circuit(P, theta)
print("quotient gates:", C.gates.elements)

# Any merge can be replayed one atomic step at a time.
big = oc.Equivalence([set(P.gates.elements)])
steps = oc.atomic_decomposition(P.gates, big)
print("atomic steps to collapse P completely:", len(steps))

# Every morphism factors as quotient, then adding isolated gates, then
# adding wires, then moving the boundary maps.
result = oc.factorise(f)
for stage in result.stages:
    kinds = sorted(oc.classify_elementary(stage))
    print(f"  {stage.source.gates.elements} -> "
          f"{stage.target.gates.elements}: {kinds}")
assert result.composite() == f
