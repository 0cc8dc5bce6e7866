"""Exception types shared across the package."""


class RPError(Exception):
    """Base class for all package-specific errors."""


class NegativeCycleError(RPError):
    """The graph (or a derived matrix) contains a negative-weight cycle."""


class UnreachableError(RPError):
    """No path exists between the requested endpoints."""


class DimensionMismatchError(RPError):
    """Matrix operands have incompatible shapes."""


class EntryOutOfBoundError(RPError):
    """A finite matrix entry exceeds the declared bound."""


class MalformedHeaderError(RPError):
    """Input text does not follow the graph file format."""


class IdOutOfRangeError(RPError):
    """A node id falls outside [0, n)."""


class WeightOutOfRangeError(RPError):
    """An edge weight falls outside [-M, M]."""


class SelfLoopError(RPError):
    """An edge starts and ends at the same node."""


class GenerationExhaustedError(RPError):
    """Random generation kept producing negative cycles; give up."""


class MismatchError(RPError):
    """Two algorithms disagreed on a replacement distance."""

    def __init__(self, message: str, *, algorithm: str | None = None,
                 seed: int | None = None):
        super().__init__(message)
        self.algorithm = algorithm
        self.seed = seed
