"""Exception types shared across the package."""


class ListColorError(Exception):
    """Base class for all errors raised by listcolor."""


class InvalidParameter(ListColorError, ValueError):
    pass


class InvalidBipartition(ListColorError, ValueError):
    pass


class PreconditionError(ListColorError, ValueError):
    pass


class SizeLimitError(ListColorError):
    pass


class BudgetExceeded(ListColorError):
    """A search ran out of its node budget before reaching an answer.

    ``explored`` is the number of search nodes (or enumerated items) seen
    before giving up; ``bracket`` optionally carries a ``(lo, hi)`` interval
    known to contain the answer.
    """

    def __init__(self, message, explored=0, bracket=None):
        super().__init__(message)
        self.explored = explored
        self.bracket = bracket
