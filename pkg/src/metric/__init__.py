from .bounds import rho_bounds, rho_plus_bounds, rho_plus_decision
from .freespace import FreeSpaceDiagram, witness_objective
from .lower_bound import frontier_lower_bound, sampled_sup_lower_bound
from .step_exact import rho_decision, rho_step_exact

__all__ = [
    "FreeSpaceDiagram",
    "frontier_lower_bound",
    "rho_bounds",
    "rho_decision",
    "rho_plus_bounds",
    "rho_plus_decision",
    "rho_step_exact",
    "sampled_sup_lower_bound",
    "witness_objective",
]
