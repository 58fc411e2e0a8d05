"""Min-max relational equations: evaluation, solving, threshold and sensitivity queries."""

from .minmax import eval_minmax, respects_coupling, solve_exact
from .oracle import grid_search, least_of
from .sensitivity import sensitivity_curve
from .thresholds import apply_coupling, require_at_least, require_at_most

__all__ = [
    "apply_coupling",
    "eval_minmax",
    "grid_search",
    "least_of",
    "require_at_least",
    "require_at_most",
    "respects_coupling",
    "sensitivity_curve",
    "solve_exact",
]
