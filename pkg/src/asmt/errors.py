"""Exception hierarchy shared by every module."""


class AsmtError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AsmtError, ValueError):
    """An input is outside the domain of the operation."""


class NotGenusTwo(DomainError):
    """The model does not define a genus-2 curve over Q."""


class NotSimilitude(DomainError):
    """The matrix is not a symplectic similitude for the fixed form J."""


class IngestIOError(AsmtError, OSError):
    """An input data file could not be read."""


class EmptyIngest(AsmtError):
    """An ingestion batch produced no valid records."""
