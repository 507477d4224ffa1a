"""Exception hierarchy shared by all evoalg modules."""

from __future__ import annotations


class EvoAlgError(Exception):
    """Base class for every error raised by evoalg."""


class GraphError(EvoAlgError, ValueError):
    """Invalid graph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedLine(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class VertexOutOfRange(EvoAlgError, IndexError):
    pass


class SizeBoundExceeded(EvoAlgError):
    """A search was requested on a graph larger than the configured bound."""

    def __init__(self, n: int, bound: int):
        self.n = n
        self.bound = bound
        super().__init__(f"graph has {n} vertices; size bound is {bound}")


class DimensionMismatch(EvoAlgError, ValueError):
    pass


class NonSquare(DimensionMismatch):
    pass


class SingularMap(EvoAlgError, ValueError):
    pass


class NotRegularOrBiregular(EvoAlgError, ValueError):
    pass


class NotRegular(NotRegularOrBiregular):
    pass


class SingularGraph(EvoAlgError, ValueError):
    pass


class SingularStructureMatrix(EvoAlgError, ValueError):
    pass
