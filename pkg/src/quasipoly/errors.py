"""Exceptions shared across the package.

The CLI maps these onto exit codes: a negative mathematical verdict
(Inadmissible, or a False answer from decide/verify) exits 1, invalid
input (ValueError) exits 2, exhausted search/enumeration budgets exit 3.
"""


class Inadmissible(ValueError):
    """No U-polygon with the requested edge count exists for this ring index."""

    def __init__(self, n: int, m: int, reason: str):
        self.n = n
        self.m = m
        self.reason = reason
        super().__init__(f"(n={n}, m={m}) inadmissible: {reason}")


class BudgetExceeded(RuntimeError):
    """An enumeration or search exceeded its configured budget."""


class SearchFailed(RuntimeError):
    """A bounded search ended without finding a witness."""
