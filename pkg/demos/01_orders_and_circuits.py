"""Build a small circuit, inspect its order, and read off connectivity.

Run from the repository root:  python3 demos/01_orders_and_circuits.py
"""

import ordercircuits as oc

# Four gates: q feeds both p and r, r feeds s, p runs independently of r/s.
P = oc.poset_from_generators(["p", "q", "r", "s"],
                             [("q", "p"), ("q", "r"), ("r", "s")])
C = oc.Circuit(P, ["a1", "a2", "a3"], ["b1", "b2"],
               {"a1": "p", "a2": "r", "a3": "s"},
               {"b1": "p", "b2": "s"})

print("cover relations:", sorted(oc.covers(C.gates)))
print("p and r comparable?", not C.gates.incomparable("p", "r"))

# Which inputs can influence a gate, and which outputs can see it?
for g in C.gates.elements:
    print(f"gate {g}: past inputs {sorted(oc.past_inputs(C, g))}, "
          f"future outputs {sorted(oc.future_outputs(C, g))}")

# The connectivity relation collapses the circuit to pure input/output
# reachability -- this is what any coarser analysis sees.
G = oc.connectivity(C)
print("connectivity:", sorted(G.pairs))

# The same circuit as text and as a diagram.
from ordercircuits import textio
print()
print(textio.serialise_circuit("P", C))
print("DOT output has", textio.to_dot(C).count("->"), "edges")
