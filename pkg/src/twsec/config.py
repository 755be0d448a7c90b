"""Budget knobs for exhaustive enumerations and distribution sweeps.

The environment variable ``TWSEC_BUDGET`` overrides both defaults with a
single integer (number of elementary terms a computation may touch).
"""

import os

# Exact code evaluation: joint terms (message tuples x sequence states).
DEFAULT_ENUM_BUDGET = 1 << 26

# Region sweeps: number of sampled input distributions.
DEFAULT_SWEEP_BUDGET = 1 << 22

_ENV_VAR = "TWSEC_BUDGET"


def resolve_budget(budget, default):
    """Pick the effective budget: explicit argument, else env var, else default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{_ENV_VAR} must be an integer, got {env!r}")
    return default
