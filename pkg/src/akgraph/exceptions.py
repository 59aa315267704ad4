"""Exception hierarchy shared by every akgraph module."""


class GraphError(ValueError):
    """Base class for invalid graph input."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class Graph6LongFormError(Graph6Error):
    """graph6 line uses the long form (order > 62), which is not supported."""


class EdgeListError(GraphError):
    """Malformed edge-list text."""


class DisconnectedGraphError(GraphError):
    """An operation that needs a connected graph received a disconnected one."""


class NotATreeError(GraphError):
    pass


class PreconditionError(GraphError):
    """Input violates a documented precondition of the operation."""


class OrderTooLargeError(GraphError):
    """Input exceeds the brute-force size cap of the operation."""


class StructureError(RuntimeError):
    """An internal structural assertion failed; indicates a bug upstream."""


class TreeCapExceeded(RuntimeError):
    """Spanning-tree enumeration hit the caller-supplied cap.

    ``count`` is the number of trees produced before the cap was hit.
    """

    def __init__(self, count, cap):
        super().__init__(f"spanning-tree cap {cap} exceeded after {count} trees")
        self.count = count
        self.cap = cap


class BoundExhausted(RuntimeError):
    """Anti-Kekule search reached ``max_k`` without finding a set."""

    def __init__(self, max_k):
        super().__init__(f"no anti-Kekule set of size <= {max_k}")
        self.max_k = max_k
