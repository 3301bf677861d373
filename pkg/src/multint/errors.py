"""Exception types shared across the package."""


class MultintError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateLabelError(MultintError):
    """A vertex label occurs more than once in a construction input."""


class UnknownEndpointError(MultintError):
    """An edge refers to a vertex that is not part of the graph."""


class SelfLoopError(MultintError):
    """An edge joins a vertex to itself."""


class BadSubdivisionArityError(MultintError):
    """Subdivision requested with a number of new vertices per edge
    outside the supported range {2, 3, 4}."""


class UnknownLabelError(MultintError):
    """A label was requested that the graph or representation does not contain."""


class OracleSizeExceededError(MultintError):
    """A brute-force solver was asked to handle more vertices than its limit."""


class LabelSetMismatchError(MultintError):
    """A representation and a graph were compared but their vertex sets differ."""


class NotBipartitePartitionError(MultintError):
    """The supplied partition is not a bipartition of the graph."""


class NotCoBipartiteError(MultintError):
    """One of the supplied sides does not induce a clique."""


class WrongKindError(MultintError):
    """A representation of the wrong kind (or wrong t) was supplied to an
    algorithm with a kind restriction."""


class EmptyEdgeSetError(MultintError):
    """A construction requires at least one edge but the input graph has none."""


class RepresentationError(MultintError):
    """A representation violates the structural rules of its kind."""
