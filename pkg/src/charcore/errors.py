"""Shared exception types."""


class SizeCapError(ValueError):
    """An input exceeds a configured size cap."""


class FormatError(ValueError):
    """Text or word input does not match the expected format."""


class UnreachableError(ValueError):
    """The target partition cannot be reached by the requested removals."""


class RangeError(ValueError):
    """A numeric parameter lies outside its supported range."""
