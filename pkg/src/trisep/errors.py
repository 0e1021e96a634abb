"""Exception types shared across the package."""


class TriSepError(Exception):
    """Base class for all package-specific errors."""


class BudgetExceededError(TriSepError):
    """An enumeration or search exceeded its step budget."""


class NotConnectedEnoughError(TriSepError):
    """An operation required k-connected input and did not get it."""


class InvalidSeparationError(TriSepError):
    """A pair of vertex sets is not a valid (mixed) separation of the graph."""


class BoundExceededError(TriSepError):
    """An exhaustive routine was asked to run beyond its configured bound."""


class ClassificationError(TriSepError):
    """A torso failed to classify; carries a structured counterexample report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
