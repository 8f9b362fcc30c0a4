"""Shared exceptions and the search-node budget."""


class VertexRangeError(ValueError):
    """A vertex label is negative or exceeds the supported bitmask width."""


class NotAFaceError(ValueError):
    """A face argument is not a face of the complex at hand."""


class NotFreeError(ValueError):
    """A claimed free pair is not free in the complex at hand."""


class NotPureError(ValueError):
    """An operation that requires a pure complex was given a non-pure one."""


class UndominatableError(ValueError):
    """No dominating set exists for the requested target set."""


class IsolatedVertexError(ValueError):
    """A domination parameter that forbids isolated vertices got one."""


class HypothesisNotMetError(ValueError):
    """A conditional check was invoked on an instance outside its hypotheses.

    Raised so callers can distinguish "skip" from "false"; property suites
    skip these instead of asserting.
    """


class BudgetExceededError(RuntimeError):
    """An exact search ran out of its node budget before reaching a verdict.

    Deliberately not a boolean result: budget exhaustion is never conflated
    with "false".
    """


DEFAULT_NODE_BUDGET = 10_000_000


class Budget:
    """Counts search nodes against a hard limit.

    One Budget is confined to a single top-level invariant evaluation and is
    never shared across threads.
    """

    __slots__ = ("limit", "used")

    def __init__(self, limit=DEFAULT_NODE_BUDGET):
        if limit <= 0:
            raise ValueError("budget limit must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceededError(
                f"search exceeded node budget of {self.limit}"
            )

    def __repr__(self):
        return f"Budget(limit={self.limit}, used={self.used})"
