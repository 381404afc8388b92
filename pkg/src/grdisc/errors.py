"""Exception hierarchy.

Every error raised deliberately by this package derives from ``GrdiscError``.
"""


class GrdiscError(ValueError):
    """Base class for all package errors."""


class UniformityTooSmall(GrdiscError):
    pass


class WrongEdgeArity(GrdiscError):
    pass


class VertexOutOfRange(GrdiscError):
    pass


class DuplicateEdge(GrdiscError):
    pass


class VertexAlreadyDeleted(GrdiscError):
    pass


class UniformityMismatch(GrdiscError):
    pass


class InvalidContext(GrdiscError):
    pass


class NotAPermutation(GrdiscError):
    pass


class WrongVariant(GrdiscError):
    pass


class EmptyGraph(GrdiscError):
    pass


class ResourceLimit(GrdiscError):
    """Raised when an instance exceeds a configured size or memory limit."""


class InstanceTooLarge(ResourceLimit):
    pass


class MemoryBudgetExceeded(ResourceLimit):
    pass


class InfeasibleParameters(GrdiscError):
    def __init__(self, message, suggestion=None):
        if suggestion is not None:
            message = f"{message}; nearest feasible: n={suggestion[0]}, p={suggestion[1]}"
        super().__init__(message)
        self.suggestion = suggestion


class NegativeCount(GrdiscError):
    pass


class FillerInfeasible(GrdiscError):
    pass


class TooManyEdges(GrdiscError):
    pass


class ParseError(GrdiscError):
    pass
