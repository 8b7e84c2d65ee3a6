"""Exception types shared across the package."""


class SpinestatError(Exception):
    """Base class for all package-specific errors."""


class CapExceeded(SpinestatError):
    """Exhaustive enumeration requested above the configured size cap."""


class EmptyTree(SpinestatError):
    """Operation requires at least one internal node."""


class MalformedCode(SpinestatError):
    """Bit string is not a valid preorder tree encoding."""


class NoRoot(SpinestatError):
    """Characteristic equation has no positive root in the search range."""


class DomainError(SpinestatError):
    """Argument outside the mathematically meaningful range."""
