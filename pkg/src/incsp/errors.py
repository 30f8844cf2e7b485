"""Exception types shared across the package.

The CLI maps ParameterError/ParseError to exit status 2 and
CapacityError to exit status 3.
"""


class IncspError(Exception):
    pass


class ParameterError(IncspError, ValueError):
    """Invalid argument or precondition violation."""


class CapacityError(IncspError, RuntimeError):
    """Requested size exceeds a hard capacity or enumeration guard."""


class ParseError(IncspError, ValueError):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StreamEnd(IncspError, RuntimeError):
    """Attempt to activate past the end of the constraint stream."""


class FitFailure(IncspError, RuntimeError):
    """Fit input is degenerate (no divergence present); no parameters invented."""
