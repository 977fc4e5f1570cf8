"""Exception types raised across the package."""


class ConvexDualError(Exception):
    """Base class for every error raised by this package."""


class GroundTooLarge(ConvexDualError):
    pass


class NotClosureSystem(ConvexDualError):
    pass


class InvalidSpace(ConvexDualError):
    pass


class GroundMismatch(ConvexDualError):
    pass


class SearchSpaceTooLarge(ConvexDualError):
    pass


class NotPreconvex(ConvexDualError):
    """Raised when restricting to a set that is not preconvex."""


class InvalidLattice(ConvexDualError):
    pass


class GenerationFailure(ConvexDualError):
    """A chosen set does not generate its lattice by joins."""


class NotCoframeHom(ConvexDualError):
    pass


class NotMonotone(ConvexDualError):
    pass


class AdjointLawFailure(ConvexDualError):
    pass


class AdjointMissing(AdjointLawFailure):
    pass


class InvariantFailure(ConvexDualError):
    pass


class NotInfHom(ConvexDualError):
    pass


class NotT0(ConvexDualError):
    pass


class InvalidMetric(ConvexDualError):
    pass


class InvalidMeasure(ConvexDualError):
    pass


class NotAGroup(ConvexDualError):
    pass


class NotInjective(ConvexDualError):
    pass


class OutOfRange(ConvexDualError):
    pass
