"""Shared exception types.

ValueError is used for plain bad input everywhere; the two classes here
mark conditions a caller may want to treat specially: blowing a size
budget, and finding a counterexample to something the library asserts
can never happen (which means a bug, not bad input).
"""


class BudgetExceeded(RuntimeError):
    """An enumeration or table would exceed the configured size budget."""


class ConsistencyError(AssertionError):
    """An internal invariant failed; carries a witness when available."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
