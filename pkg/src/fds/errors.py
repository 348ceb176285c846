"""Shared exception types for the fds package."""


class FdsError(Exception):
    """Base class for all package errors."""


class ParseError(FdsError, ValueError):
    """Malformed polynomial, system, graph, word, or permutation text."""


class DimensionMismatchError(FdsError, ValueError):
    """Operands live in different numbers of variables."""


class DimensionCapError(FdsError, ValueError):
    """Requested variable count exceeds the configured cap."""


class BudgetExceededError(FdsError, RuntimeError):
    """An enumeration would exceed its configured budget.

    `required` carries the exact size that was refused when it is known.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required
