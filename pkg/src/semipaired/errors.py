class SemipairedError(ValueError):
    """Base class for every error raised by this package."""


class InvalidGraphError(SemipairedError):
    pass


class NotATreeError(SemipairedError):
    pass


class BoundExceeded(SemipairedError):
    """Raised by the exact oracles when no witness exists within ``upper_bound``."""

    def __init__(self, bound: int, explored: int):
        super().__init__(f"bound-exceeded: no witness of cardinality <= {bound}")
        self.bound = bound
        self.explored = explored


class FormatError(SemipairedError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
