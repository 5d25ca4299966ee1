"""Error types shared across the package."""


class GenemagicError(ValueError):
    """Base class for all errors raised by genemagic."""


class ParseError(GenemagicError):
    """Malformed word or grid text."""


class ShapeError(GenemagicError):
    """Dimension mismatch: ragged rows, bad region size, wrong word length."""


class RangeError(GenemagicError):
    """Value outside the supported exact-arithmetic range."""


class DomainError(GenemagicError):
    """Input outside an operation's domain."""


class DataError(GenemagicError):
    """Required entry missing from embedded or supplied data."""


class PreconditionError(GenemagicError):
    """Operation precondition not met."""
