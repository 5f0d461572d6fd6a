"""Enumeration budget shared by the copy-search and probe layers.

Exhaustive searches refuse to start when the number of candidate subsets
exceeds the budget, so a mistyped parameter fails fast instead of running
for hours.  The budget is read from the HYPERTILE_BUDGET environment
variable; callers may also pass an explicit value.
"""

import os

from .errors import BudgetExceededError, ValidationError

ENV_VAR = "HYPERTILE_BUDGET"
DEFAULT_BUDGET = 5_000_000


def resolve_budget(budget: int | None = None) -> int:
    """Return the effective budget: explicit argument, else env var, else default."""
    if budget is not None:
        if budget < 1:
            raise ValidationError(f"budget must be positive, got {budget}")
        return budget
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValidationError(f"{ENV_VAR} must be positive, got {value}")
    return value


def charge(candidates: int, budget: int | None = None, what: str = "enumeration") -> None:
    """Raise BudgetExceededError if `candidates` exceeds the effective budget."""
    limit = resolve_budget(budget)
    if candidates > limit:
        raise BudgetExceededError(
            f"{what} needs {candidates} candidates, over the budget of {limit}"
            f" (raise {ENV_VAR} to override)"
        )
