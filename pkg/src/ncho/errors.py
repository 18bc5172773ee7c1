"""Exception and warning types shared across the package."""


class NCError(Exception):
    """Base class for all library errors."""


class NonPositivePhysical(NCError, ValueError):
    """A physical scale (mass, frequency or action) is not strictly positive."""


class DegenerateDeformation(NCError, ValueError):
    """theta*eta >= hbar^2: the map between deformed and ordinary variables degenerates."""


class ConsistencyFailure(NCError, RuntimeError):
    """An internal algebraic identity failed; indicates an implementation bug."""


class DomainError(NCError, ValueError):
    """Input outside the mathematical domain of the requested quantity."""


class PreconditionError(NCError, ValueError):
    """A documented precondition of the operation does not hold."""


class UnknownFigure(NCError, ValueError):
    """Figure preset name not recognised."""


class StepCountTooSmall(UserWarning):
    """Fixed-step integration was requested with fewer steps than is accurate."""
