"""Exception types shared across the package."""


class DiamchromeError(Exception):
    """Base class for all package errors."""


class PreconditionError(DiamchromeError, ValueError):
    """An operation was called on input outside its contract."""


class BudgetExceededError(DiamchromeError):
    """A search exhausted its node budget before reaching an answer."""

    def __init__(self, budget, message=None):
        self.budget = budget
        super().__init__(message or f"search budget of {budget} nodes exceeded")


class GraphFormatError(DiamchromeError, ValueError):
    """A text input (graph, list assignment, CNF) failed to parse."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
