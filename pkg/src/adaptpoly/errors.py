"""Shared exception types."""


class CapacityError(Exception):
    """A result or intermediate would exceed a machine-word or dense-length cap."""


class ParseError(ValueError):
    """Malformed polynomial text."""
