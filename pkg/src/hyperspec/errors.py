"""Exception hierarchy shared by every module."""


class HypergraphError(ValueError):
    """Base class for all errors raised by hyperspec."""


class EdgeTooSmall(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class InvalidCardinality(HypergraphError):
    pass


class SizeOverflow(HypergraphError):
    pass


class NotUniform(HypergraphError):
    pass


class CardinalityMismatch(HypergraphError):
    pass


class Disconnected(HypergraphError):
    pass


class EmptySubset(HypergraphError):
    pass


class IsolatedVertex(HypergraphError):
    pass


class NotSymmetric(HypergraphError):
    pass


class NoConvergence(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class NoCutExists(HypergraphError):
    pass


class UnknownBound(HypergraphError):
    pass


class MissingOption(HypergraphError):
    pass


class NotErgodic(HypergraphError):
    pass


class InvalidDimension(HypergraphError):
    pass


class NotDistribution(HypergraphError):
    pass


class NotAdjacent(HypergraphError):
    pass


class ParseError(HypergraphError):
    """Malformed ``.hg`` input; ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidOption(HypergraphError):
    pass
