"""Exception hierarchy shared by all heckelib modules."""


class HeckeError(Exception):
    """Base class for all heckelib errors."""


class DomainError(HeckeError, ValueError):
    """Input outside the mathematical domain of an operation."""


class DataError(HeckeError, ValueError):
    """Missing or malformed external data (eigenvalue/character files)."""


class InternalConsistencyError(HeckeError, RuntimeError):
    """Two routes to the same quantity disagreed; indicates a defect."""


class ResourceLimitError(HeckeError, MemoryError):
    """A request exceeded the configured memory/time budget."""
