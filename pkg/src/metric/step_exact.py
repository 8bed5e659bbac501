"""
Module: step_exact

The Skorokhod distance

    ρ(f, g) = inf over γ of sup|f - g∘γ| + sup|id - γ|

computed exactly for step functions.

For step functions the value mismatch of any warp is one of the finitely many
differences |v_i - w_j| of their values, and the time budgets at which
reachability can change are the differences |s_i - u_j| of their jump times.
Searching the value candidates in increasing order and bisecting the time
candidates with the exact decision procedure finds the infimum.

Example:
    >>> from src.piecewise import CadlagFunction
    >>> from src.metric import rho_step_exact
    >>> f = CadlagFunction.step([0.5], [0.0, 1.0])
    >>> g = CadlagFunction.step([0.6], [0.0, 1.0])
    >>> round(rho_step_exact(f, g).upper, 9)
    0.1

Dependencies:
    - numpy
    - src.metric.freespace
"""

import logging

import numpy as np

from src.models.certificate import DistanceCertificate, RefinementLevel, ThresholdQuery
from src.models.config import DEFAULT_SOLVER, SolverConfig
from src.piecewise import CadlagFunction
from src.turbo import embed
from src.metric.bounds import EXACT_GAP, rho_bounds
from src.metric.freespace import FreeSpaceDiagram, witness_objective

logger = logging.getLogger(__name__)


def rho_decision(
    f: CadlagFunction,
    g: CadlagFunction,
    query: ThresholdQuery,
    settings: SolverConfig = DEFAULT_SOLVER,
) -> bool:
    """
    Decides whether some γ has sup|f - g∘γ| <= eps_value and sup|id - γ| <= eps_time.

    Args:
        f (CadlagFunction): First function.
        g (CadlagFunction): Second function, composed with γ.
        query (ThresholdQuery): The two budgets.
        settings (SolverConfig): Solver settings.

    Returns:
        bool: True iff feasible.
    """
    if not (f.is_step and g.is_step):
        logger.debug("rho_decision on non-step input uses the general free-space diagram")
    diagram = FreeSpaceDiagram(embed(g), embed(f), slack=settings.numeric_slack)
    return diagram.decide(query.eps_value, query.eps_time)


def _critical_values(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.union1d([0.0], np.abs(a[:, None] - b[None, :]).ravel())


def rho_step_exact(
    f: CadlagFunction,
    g: CadlagFunction,
    settings: SolverConfig = DEFAULT_SOLVER,
) -> DistanceCertificate:
    """
    Exact Skorokhod distance between two step functions.

    Non-step input is handed to rho_bounds at the configured tolerance, and the
    resulting certificate is not marked exact.

    Args:
        f (CadlagFunction): First step function.
        g (CadlagFunction): Second step function.
        settings (SolverConfig): Solver settings.

    Returns:
        DistanceCertificate: lower = ρ(f, g); upper = the recomputed objective
        of the witness, within 1e-9 of it.
    """
    if not (f.is_step and g.is_step):
        logger.info("Input is not a pair of step functions; computing certified bounds instead")
        return rho_bounds(f, g, settings.tolerance, settings)

    x, y = embed(g), embed(f)
    diagram = FreeSpaceDiagram(x, y, slack=settings.numeric_slack)
    value_candidates = _critical_values(
        np.concatenate((f.rights, f.lefts)), np.concatenate((g.rights, g.lefts))
    )
    time_candidates = _critical_values(f.times, g.times)

    best, best_value, best_time = np.inf, 0.0, 1.0
    for eps_value in value_candidates:
        if eps_value >= best:
            break
        if not diagram.decide(eps_value, time_candidates[-1]):
            continue
        low, high = -1, len(time_candidates) - 1
        while high - low > 1:
            middle = (low + high) // 2
            if diagram.decide(eps_value, time_candidates[middle]):
                high = middle
            else:
                low = middle
        total = eps_value + time_candidates[high]
        if total < best or (total == best and time_candidates[high] < best_time):
            best, best_value, best_time = total, float(eps_value), float(time_candidates[high])

    witness = diagram.witness(best_value, best_time)
    objective = float(sum(witness_objective(x, y, witness)))
    upper = max(float(best), objective)
    logger.info("Exact step distance %.12g (witness objective %.12g)", best, objective)
    return DistanceCertificate(
        lower=float(best),
        upper=upper,
        witness=witness,
        grid_resolution=1.0,
        exact=upper - best <= EXACT_GAP,
        history=[RefinementLevel(level=0, grid=1.0, lower=float(best), upper=upper)],
    )
