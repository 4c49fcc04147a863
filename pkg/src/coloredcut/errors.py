"""Shared exception types."""


class FormatError(ValueError):
    """A text input (graph, cut, CNF, provenance) does not match its format."""


class CapExceededError(RuntimeError):
    """An exhaustive search was refused because the instance exceeds the size cap."""
