"""Exception types shared across the package."""


class HypertileError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(HypertileError, ValueError):
    """A precondition on an argument was violated."""


class NotKPartiteError(HypertileError, ValueError):
    """The pattern admits no partition into k nonempty transversal classes."""


class UnsupportedFieldError(HypertileError, ValueError):
    """The requested field order is not a prime power in the supported table."""


class BudgetExceededError(HypertileError, RuntimeError):
    """An enumeration would exceed the configured candidate budget."""


class FormatError(HypertileError, ValueError):
    """A text-format file is malformed.  Carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
