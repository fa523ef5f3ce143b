"""Exception types and the shared search budget."""

import os

DEFAULT_BUDGET = 20_000_000


class GraphError(ValueError):
    """Malformed graph input or an operation applied to a missing edge."""


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class VerificationError(AssertionError):
    """A mechanical check of a claimed mathematical fact failed."""


class BudgetExhausted(RuntimeError):
    """A backtracking or recursive search hit its node budget.

    Raised instead of returning a possibly wrong answer.
    """


def default_budget():
    """Node budget for exponential searches; ``CHROMROOT_BUDGET`` overrides it."""
    raw = os.environ.get("CHROMROOT_BUDGET")
    if raw:
        return int(raw)
    return DEFAULT_BUDGET


class Budget:
    """Counts search nodes and raises :class:`BudgetExhausted` past the limit."""

    __slots__ = ("limit", "used", "what")

    def __init__(self, limit=None, what="search"):
        self.limit = default_budget() if limit is None else limit
        self.used = 0
        self.what = what

    def tick(self, amount=1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExhausted(f"{self.what} exceeded node budget of {self.limit}")
