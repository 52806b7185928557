"""Exception hierarchy shared by all modules."""


class AbdiskError(ValueError):
    """Base class for every structured error raised by the package."""


class DomainError(AbdiskError):
    """An argument lies outside the domain of the operation."""


class PoleError(AbdiskError):
    """A gamma, digamma or hypergeometric parameter sits on a pole.

    ``location`` carries the offending argument when it is known.
    """

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class ConvergenceError(AbdiskError):
    """A series or quadrature failed to reach its tolerance within budget."""

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class ConstraintError(AbdiskError):
    """A group element violates its normalization constraint."""


class SeamError(DomainError):
    """The angle difference hits the excluded seam phi - phi' = +-pi."""


class CoincidenceError(DomainError):
    """The two points coincide where the kernel is singular."""


class EdgeSingularityError(AbdiskError):
    """A density of states is evaluated exactly on a genuine edge singularity."""


class QuantumNumberError(DomainError):
    """Quantum numbers not admissible for the requested level family."""


class NonFiniteError(AbdiskError):
    """A computation overflowed or produced NaN."""
