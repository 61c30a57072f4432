"""Exception types shared across the library."""


class SolverError(Exception):
    """Base class for every error this library raises on purpose."""


class DimensionError(SolverError):
    """Operands have incompatible or invalid dimensions."""


class NumericError(SolverError):
    """A non-finite value appeared where a finite one is required."""


class ConfigError(SolverError):
    """A configuration value violates its constraints."""


class InvalidInputError(SolverError):
    """An input value lies outside the operation's domain."""


class FormatError(SolverError):
    """A text input does not conform to the expected format.

    Carries the 1-based ``line`` (and, for token-level problems, the
    1-based ``column`` counted in tokens) when the location is known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None and column is not None:
            message = f"line {line}, token {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column
