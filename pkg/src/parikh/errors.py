"""Exception types shared across the package."""


class ParikhError(Exception):
    """Base class for all computation errors raised by this package."""


class BoundExceeded(ParikhError):
    """An enumeration would exceed the configured word-length bound."""


class DimensionMismatch(ParikhError):
    """Matrix dimensions are incompatible with the requested operation."""


class NotAParikhMatrix(ParikhError):
    """The matrix is not the image of any word under the matrix morphism."""


class NoDecomposition(ParikhError):
    """The faithful binary decomposition search found no solution at any exponent."""


class PreconditionViolated(ParikhError):
    """An operation-specific precondition does not hold."""


class EmptyWord(ParikhError):
    """The operation is undefined on the empty word."""


class NotMEquivalent(ParikhError):
    """The two words do not share a Parikh matrix."""


class EqualWords(ParikhError):
    """The comparison relation is only defined on distinct words."""
