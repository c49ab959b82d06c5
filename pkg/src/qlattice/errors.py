"""Shared exception types."""


class NotPrimePowerError(ValueError):
    """Raised when a field cardinality is not a prime power."""


class UnsupportedFieldError(ValueError):
    """Raised when a field cardinality exceeds the configured bound."""


class TooLargeError(ValueError):
    """Raised when an enumeration would exceed the configured size ceiling."""
