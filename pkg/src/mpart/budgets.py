"""Resource budgets for enumeration and literal nested summation.

Both budgets are soft limits protecting callers from accidentally huge
computations; they can be overridden per call or through the environment
variables ``MPART_ENUM_BUDGET`` (partitions materialized or walked per
enumeration call) and ``MPART_LOOP_BUDGET`` (innermost steps per literal
nested summation).
"""

import os

DEFAULT_ENUM_BUDGET = 10**6
DEFAULT_LOOP_BUDGET = 10**8

ENUM_BUDGET_ENV = "MPART_ENUM_BUDGET"
LOOP_BUDGET_ENV = "MPART_LOOP_BUDGET"


class BudgetExceeded(RuntimeError):
    """A configured resource budget would be (or was) exceeded."""


class EnumerationBudgetExceeded(BudgetExceeded):
    """The enumeration would produce more partitions than the budget allows."""


class LoopBudgetExceeded(BudgetExceeded):
    """The literal nested summation would run more innermost steps than allowed."""


def enum_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(ENUM_BUDGET_ENV, DEFAULT_ENUM_BUDGET))


def loop_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(LOOP_BUDGET_ENV, DEFAULT_LOOP_BUDGET))
