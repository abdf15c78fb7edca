"""Exception types shared across the package."""


class UnpredictableError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(UnpredictableError, ValueError):
    """An argument value violates an operation's precondition."""


class CoverageError(UnpredictableError, ValueError):
    """A requested index or time range is not covered by the available data."""


class ResourceError(UnpredictableError):
    """A configured size or depth limit would be exceeded."""


class ResolutionError(UnpredictableError, ValueError):
    """Sampling is too coarse for the requested verification."""
