"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of the operation."""


class DivisibilityError(DomainError):
    """Raised when k does not divide n for a partition-based operation."""


class RangeError(DomainError, IndexError):
    """Rank or index out of range."""


class ResourceError(RuntimeError):
    """Request exceeds a configured enumeration or matrix-size bound."""


class InconsistencyError(AssertionError):
    """Two characterizations that must agree gave different answers."""
