"""Exception types shared across the package."""


class PartitionParseError(ValueError):
    """Raised when partition text cannot be parsed."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


class CapacityError(RuntimeError):
    """A configured size limit (enumeration budget, table limit) was exceeded."""


class ConsistencyError(ArithmeticError):
    """An exact computation produced a value that cannot be right.

    Raised when a count that must be a nonnegative integer reduces to
    something else, or a polynomial division that must be exact is not.
    Always indicates a bug, never bad input.
    """
