"""Exception hierarchy shared by all modules."""


class RootedBasisError(Exception):
    """Base class for every domain error raised by this package."""


class GraphError(RootedBasisError, ValueError):
    """Malformed graph input: bad vertex index, nonpositive weight, bad root."""


class NotBiconnected(RootedBasisError):
    """The graph is not 2-vertex-connected.

    Exactly one witness attribute is set: ``cut_vertex`` for an articulation
    point, ``unreached_vertex`` for a disconnected graph, ``self_loop`` for a
    loop edge (which can never sit on an open ear), ``bridge`` for an edge
    whose removal disconnects the graph.
    """

    def __init__(self, message, *, cut_vertex=None, unreached_vertex=None,
                 self_loop=None, bridge=None):
        super().__init__(message)
        self.cut_vertex = cut_vertex
        self.unreached_vertex = unreached_vertex
        self.self_loop = self_loop
        self.bridge = bridge


class NoRootedBasis(RootedBasisError):
    """The rooted graph has no rooted cycle basis."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoPair(RootedBasisError):
    """No two vertex-disjoint paths exist for the requested terminals."""


class NoCycle(RootedBasisError):
    """No rooted cycle passes through the requested edge."""


class InternalEarViolation(RootedBasisError):
    """The new edges of a greedy cycle do not form a single ear."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class SearchLimitExceeded(RootedBasisError):
    """An exponential search hit its node budget before deciding."""


class CapExceeded(RootedBasisError):
    """A brute-force oracle exceeded its enumeration cap."""


class InvalidEmbedding(RootedBasisError, ValueError):
    """A rotation system is inconsistent with its graph."""


class WrongDegree(RootedBasisError, ValueError):
    """The gadget replacement needs a vertex of degree exactly three."""


class NotASpanningTree(RootedBasisError, ValueError):
    pass


class RootNotInTree(RootedBasisError, ValueError):
    pass
