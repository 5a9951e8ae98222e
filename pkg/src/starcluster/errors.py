"""Exception hierarchy shared by every module."""


class StarClusterError(Exception):
    """Base class for all library errors."""


class EmptyEdge(StarClusterError, ValueError):
    pass


class InvalidSize(StarClusterError, ValueError):
    pass


class ParseError(StarClusterError, ValueError):
    pass


class UnknownVertex(StarClusterError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"vertex {self.vertex!r} is not in the hypergraph"


class UnknownEdge(StarClusterError, KeyError):
    def __init__(self, edge):
        super().__init__(edge)
        self.edge = edge

    def __str__(self):
        return f"edge {sorted(self.edge)!r} is not in the hypergraph"


class MissingPathEdge(StarClusterError, ValueError):
    def __init__(self, edge):
        super().__init__(f"tight-path edge {sorted(edge)!r} is missing")
        self.edge = frozenset(edge)


class NotACycle(StarClusterError, ValueError):
    pass


class NotAGraph(StarClusterError, ValueError):
    pass


class NotAFace(StarClusterError, ValueError):
    pass


class IndexOutOfRange(StarClusterError, IndexError):
    pass


class TooLarge(StarClusterError):
    """Raised when a vertex-count guard would be exceeded."""

    def __init__(self, count, guard, what="vertices"):
        super().__init__(f"{count} {what} exceeds the guard of {guard}")
        self.count = count
        self.guard = guard


class SearchBudgetExceeded(StarClusterError):
    """The node budget of a cycle search ran out; the answer is unknown.

    ``partial`` carries whatever the search had established so far (for a
    packing search: the best packing size found).
    """

    def __init__(self, budget, partial=None):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget
        self.partial = partial


class CombinationBudgetExceeded(StarClusterError):
    def __init__(self, cap, partial=None):
        super().__init__(f"step-3 tuple enumeration exceeded the cap of {cap}")
        self.cap = cap
        self.partial = partial


class PreconditionViolated(StarClusterError, ValueError):
    """``reason`` is one of ``"IsolatedVertex"``, ``"InducedThreeCycle"``,
    ``"NotNormalized"``; ``witness`` holds the offending cycle if any."""

    def __init__(self, reason, vertex, witness=None):
        msg = f"{reason} at vertex {vertex}"
        if witness is not None:
            msg += f" (witness {witness})"
        super().__init__(msg)
        self.reason = reason
        self.vertex = vertex
        self.witness = witness
