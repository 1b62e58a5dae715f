"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FlameError(ValueError):
    """Base class for every error raised by this package."""


class PreconditionError(FlameError):
    """An operation was called on an input violating its precondition."""


class SizeBoundError(FlameError):
    """An exhaustive routine was asked to run past its configured bound."""

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what} is {size}, exceeds bound {bound}")
        self.size = size
        self.bound = bound


class GraphFormatError(FlameError):
    """Malformed graph text; carries the 1-based offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
