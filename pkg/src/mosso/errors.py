"""Exception types raised across the package."""

from __future__ import annotations


class SoundnessError(ValueError):
    """An edge change that does not fit the current graph.

    Raised for the insertion of an edge that already exists or the deletion
    of one that does not.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message if index is None else f"event {index}: {message}")
        self.index = index


class IntegrityError(RuntimeError):
    """Internal bookkeeping disagrees with itself (a corrupted state)."""


class NoNeighborsError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed text input; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class SnapshotError(ParseError):
    pass


class VerificationError(RuntimeError):
    """The summary stopped matching the exact graph during a verified run."""

    def __init__(self, report):
        super().__init__(f"verification failed: {report}")
        self.report = report
