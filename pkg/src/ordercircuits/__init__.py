"""Order-theoretic circuit syntax.

Circuits as finite partial orders with input/output maps; morphisms as
syntactical rewrites; quotients by compatible congruences; and the two
canonical circuits with a given input-output connectivity: the concept
lattice (greatest) and the basic circuit (least).
"""

from .circuit import (Circuit, Relation, connectivity, find_isomorphism,
                      future_outputs, past_inputs)
from .congruence import (Equivalence, apply_decomposition, atomic_decomposition,
                         block_name, is_compatible, quotient_circuit,
                         quotient_map, quotient_poset, quotient_preorder)
from .errors import (BoundaryMismatch, BudgetExceeded, ConnectivityNotContained,
                     ConnectivityNotContaining, CycleError, EmptyPoset,
                     InvalidPartition, MismatchedBoundary, NotALattice,
                     NotAMorphism, NotCompatible, OrderCircuitError, ParseError,
                     UnknownElement)
from .fca import (basic_circuit, canonical_morphism_from_basic,
                  canonical_morphism_to_lattice, closed_input_sets,
                  closure_inputs, closure_outputs, common_children,
                  common_parents, Concept, concept_lattice, concepts,
                  concept_name, concept_of_gate, is_closed_inputs,
                  is_closed_outputs, is_dense_realisation, verify_sandwich,
                  verify_three_perspectives)
from .morphism import (FactorisationResult, Morphism, check_morphism,
                       classify_elementary, compose, endomorphisms, factorise,
                       find_morphism, identity_morphism, is_embedding,
                       is_morphism, kernel, morphism_exists,
                       syntactically_equivalent)
from .poset import (Poset, covers, is_convex, is_lattice, join_of,
                    joins_and_meets, meet_of, poset_from_generators)
from .textio import Document, parse, serialise, to_dot

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
