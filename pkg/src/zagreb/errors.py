"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for every contract violation raised by this package."""


class VertexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EdgeAbsent(GraphError):
    pass


class EmptyGraph(GraphError):
    """Graphs on zero vertices are rejected at every construction boundary."""


class MalformedEncoding(GraphError):
    pass


class UnsupportedSize(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotABlock(GraphError):
    pass


class AcyclicGraph(GraphError):
    pass


class DomainError(GraphError):
    pass


class DomainTooSmall(DomainError):
    pass


class InvalidParameters(GraphError):
    pass


class SizeLimitExceeded(GraphError):
    pass


class PreconditionViolated(GraphError):
    """A rewrite site fails one of its named precondition clauses."""


class DegenerateSite(PreconditionViolated):
    """Named site vertices overlap in a way that would break simplicity."""


class InvalidInput(GraphError):
    pass
