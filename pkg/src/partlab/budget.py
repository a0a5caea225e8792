"""Budget plumbing shared by the evaluators.

Budgets exist to turn accidental nontermination into a loud BudgetExceeded
instead of a hang. PLAB_BUDGET, when set to a positive integer, overrides
every default budget in the package (recursion chains, reachable-set growth,
path enumeration).
"""

from __future__ import annotations

import os

ENV_VAR = "PLAB_BUDGET"

DAG_VERTEX_BUDGET = 1_000_000
PATH_BUDGET = 1_000_000
MAXPART_CHAIN_SLACK = 4


def env_budget() -> int | None:
    """The PLAB_BUDGET override, or None when unset/unusable."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None


def resolve(explicit: int | None, default: int) -> int:
    """Priority: explicit argument, then PLAB_BUDGET, then the default."""
    if explicit is not None:
        return explicit
    override = env_budget()
    if override is not None:
        return override
    return default
