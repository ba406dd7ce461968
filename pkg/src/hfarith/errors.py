"""Exception hierarchy shared by every layer.

The CLI maps ``HFError`` subclasses to exit code 1 and ``ParseError`` to 2.
"""


class HFError(Exception):
    """Base class for domain errors."""


class TooLargeError(HFError):
    """A materialization would exceed the configured limit."""


class BudgetExceeded(TooLargeError):
    """A size-level computation would exceed its bit budget."""


class EmptySetError(HFError):
    """An operation needing a member was given the empty set."""


class NotInFieldError(HFError):
    """An element is not in the field of the ordering."""


class InvalidOrderingError(HFError):
    """A set fails the linear ordering clauses."""


class InvalidBaseError(HFError):
    """A set is not a numeration base."""


class UnsupportedError(HFError):
    """The operation is not defined for this system."""


class ParseError(Exception):
    """Syntax error with a 1-based column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.message = message
        self.column = column
