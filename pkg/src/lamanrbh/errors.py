"""Exception hierarchy shared by all modules."""


class LamanError(Exception):
    """Base class for every error raised by this package."""


class GraphError(LamanError, ValueError):
    """Invalid graph construction input."""

    def __init__(self, message, edge_index=None):
        super().__init__(message)
        self.edge_index = edge_index


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class OutOfDomain(LamanError, ValueError):
    """Raised for graphs with fewer than two vertices."""


class TooLarge(LamanError, ValueError):
    pass


class BadProbability(LamanError, ValueError):
    pass


class WrongEdgeCount(LamanError, ValueError):
    pass


class IndexMismatch(LamanError, ValueError):
    pass


class InvalidPartition(LamanError, ValueError):
    pass


class LeafRuleViolation(LamanError):
    """A forest inside a hierarchy node collapsed to one tree with more than one vertex.

    ``node`` is the hierarchy node being expanded and ``vertices`` the
    vertex set of that node, which induces at least ``2|vertices| - 2`` edges.
    """

    def __init__(self, node, vertices=None):
        super().__init__(f"leaf rule violated below hierarchy node {node}")
        self.node = node
        self.vertices = vertices


class EdgeNotLive(LamanError, ValueError):
    pass


class EndpointsSplit(LamanError, ValueError):
    pass


class MalformedHierarchy(LamanError, ValueError):
    pass


class ParseError(LamanError, ValueError):
    """Graph file syntax error.  ``line`` is 1-based."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SchemaError(LamanError, ValueError):
    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path
