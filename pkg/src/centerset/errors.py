"""Exception hierarchy shared by every module."""


class GraphError(Exception):
    """Base class for all errors raised by centerset."""


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class CycleTooShort(GraphError):
    pass


class Disconnected(GraphError):
    """Eccentricity (and hence radius, center, ...) is undefined."""


class BadParameters(GraphError):
    pass


class InfeasibleTarget(GraphError):
    """No graph has the requested (order, radius, center size)."""


class OrderTooLarge(GraphError):
    pass


class NotInducedCycle(GraphError):
    pass


class MixedOrders(GraphError):
    pass


class CodecError(GraphError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
