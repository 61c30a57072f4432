"""Exception types for the figure scripts."""


class FiguresError(Exception):
    """Base class for every error this package raises on purpose."""


class FormatError(FiguresError):
    """A trace file does not conform to the expected table layout."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimensionError(FiguresError):
    """The trace dimension does not fit the requested plot."""


class ConfigError(FiguresError):
    """A plot request parameter violates its constraints."""
