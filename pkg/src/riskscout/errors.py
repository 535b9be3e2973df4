"""Exception types shared across the package.

The CLI maps these onto exit codes, so raising the right class matters:
parse problems -> 2, degenerate data -> 3, infeasible budgets -> 4,
search-cap overruns -> 5.
"""


class RiskscoutError(Exception):
    """Base class for all package-specific errors."""


class ImpossibleObservationError(RiskscoutError, ValueError):
    """A Bayes update was asked to condition on a zero-probability event."""


class DegenerateDataError(RiskscoutError, ValueError):
    """Input data admits no valid answer (e.g. a zero-variance slice)."""


class InfeasibleBudgetError(RiskscoutError, ValueError):
    """The requested budget cannot fund any plan."""


class NodeCapExceededError(RiskscoutError, RuntimeError):
    """The exact search exceeded its node-expansion safety cap."""


class ConfigError(RiskscoutError, ValueError):
    """An experiment config failed validation; message names the field."""
