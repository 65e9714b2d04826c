"""Shared exception types."""


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class DiagramTypeError(ValueError):
    """A diagram slice does not match its input boundary."""

    def __init__(self, message, slice_index=None, expected=None, actual=None):
        if slice_index is not None:
            message = (
                f"{message} (slice {slice_index}: expected {''.join(expected) or 'empty'},"
                f" got {''.join(actual) or 'empty'})"
            )
        super().__init__(message)
        self.slice_index = slice_index
        self.expected = expected
        self.actual = actual


class ParseError(ValueError):
    """Malformed textual input, with a 1-based source position."""

    def __init__(self, message, line=1, col=1):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class CapacityError(RuntimeError):
    """An enumeration or evaluation exceeds its configured cap."""
