"""Exception types shared across the package."""


class SyncPathsError(Exception):
    """Base class for all package errors."""


class NotTypicalError(SyncPathsError):
    """Configuration has a zero or repeated increment, so the event order is ambiguous."""


class UnsynchronizedError(SyncPathsError):
    """Integration horizon was exhausted before the subnetwork became complete."""


class SizeGuardError(SyncPathsError):
    """Requested enumeration exceeds the configured size guard."""


class InvalidCodeError(SyncPathsError):
    """Vector(s) do not satisfy the invariants of a subnetwork code."""
