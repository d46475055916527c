"""Exception types shared across the package."""


class OrderCircuitError(Exception):
    """Base class for all errors raised by this package."""


class UnknownElement(OrderCircuitError):
    """An identifier does not belong to the structure it was used with."""


class CycleError(OrderCircuitError):
    """Generator pairs force p <= q <= p for distinct p, q."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("order generators create a cycle: " + " < ".join(self.cycle))


class EmptyPoset(OrderCircuitError):
    """Operation requires a nonempty carrier."""


class BoundaryMismatch(OrderCircuitError):
    """Two circuits do not share the same input/output sets."""


# The same condition seen from the isomorphism-search side.
MismatchedBoundary = BoundaryMismatch


class InvalidPartition(OrderCircuitError):
    """Blocks do not partition the carrier set."""


class NotCompatible(OrderCircuitError):
    """The quotient preorder of the partition is not antisymmetric."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotAMorphism(OrderCircuitError):
    """The given map fails one of the circuit-morphism conditions."""


class NotALattice(OrderCircuitError):
    """The poset is not a lattice where one is required."""


class ConnectivityNotContained(OrderCircuitError):
    """connectivity(P) is not a subset of the given relation."""


class ConnectivityNotContaining(OrderCircuitError):
    """connectivity(P) does not contain the given relation."""


class BudgetExceeded(OrderCircuitError):
    """A backtracking search ran out of its node budget."""


class ParseError(OrderCircuitError):
    """Syntax or semantic error in a .circ document."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"{line}:{col}: {message}"
        super().__init__(message)
