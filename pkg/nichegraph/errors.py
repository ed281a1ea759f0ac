"""
Exceptions raised by the nichegraph package.

Everything derives from NicheGraphError so that callers (the CLI in particular) can catch the whole family at
once. Errors describing a bad value also derive from ValueError.
"""


class NicheGraphError(Exception):
    """Base class of every error raised by nichegraph."""


class InvalidVertex(NicheGraphError, ValueError):
    """Unknown or malformed vertex identifier."""


class DuplicateVertex(NicheGraphError, ValueError):
    """A vertex identifier was declared twice."""


class SizeLimit(NicheGraphError):
    """Input exceeds the hard bound of an exact routine."""

    def __init__(self, routine, size, limit):
        self.routine = routine
        self.size = size
        self.limit = limit
        super().__init__(f'ERROR: {routine} supports at most {limit} (got {size})')


class NotAComponent(NicheGraphError, ValueError):
    """Vertex set is not a connected component of the graph."""


class Disconnected(NicheGraphError, ValueError):
    """A connected, nonempty graph was required."""


class CertificateMismatch(NicheGraphError, ValueError):
    """Certificate does not belong to the graph, or has the wrong decision or reason."""


class InternalRoundTripFailure(NicheGraphError):
    """A synthesized witness does not reproduce its input graph. Always a construction bug."""


class InvalidTournament(NicheGraphError, ValueError):
    """Bipartite tournament violates one of its structural invariants."""


class MissingArc(InvalidTournament):
    """A cross pair of the bipartition carries no arc."""

    def __init__(self, u, v):
        self.pair = (u, v)
        super().__init__(f'ERROR: missing arc between {u} and {v}')


class ArcWithinSide(InvalidTournament):
    """Arc joins two vertices of the same side."""


class VertexOnBothSides(InvalidTournament):
    """Vertex declared on the left and on the right."""


class ParseError(NicheGraphError, ValueError):
    """Syntax error in a graph or tournament file."""

    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f'ERROR: line {lineno}: {message}')
