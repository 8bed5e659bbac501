"""
Module: lower_bound

Certified lower bounds for the semi-distance.

Two relaxations are provided. The sampled-sup relaxation only looks at finitely
many times of y: for any warp γ, γ(t_a) falls into some sample interval of x,
and the mismatch at t_a is at least the distance from y's value to the range of
x over that interval. Minimizing the sum of the two largest such mismatches over
monotone assignments is a bottleneck path problem, solved for a ladder of time
budgets. The frontier bound reads a lower bound off the probes of the exact
decision procedure.

Dependencies:
    - numpy
    - src.turbo
"""

import logging
from typing import Iterable, Tuple

import numpy as np

from src.models.certificate import BudgetProbe
from src.turbo import Turbofunction
from src.metric.freespace import uniform_grid

logger = logging.getLogger(__name__)


def sample_times(x: Turbofunction, grid: float, max_samples: int) -> np.ndarray:
    """Node times of x together with a uniform grid, thinned evenly to at most max_samples points."""
    points = np.union1d(np.union1d(x.F.times, x.sigma.times), uniform_grid(grid))
    if len(points) > max_samples:
        keep = np.unique(np.round(np.linspace(0, len(points) - 1, max_samples)).astype(int))
        points = points[keep]
    return points


def _interval_ranges(curve_times: np.ndarray, rights_at, lefts_at, samples: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Closed range of a càdlàg curve over each sample interval [samples[b], samples[b+1])."""
    fine = np.union1d(samples, curve_times)
    starts = np.searchsorted(fine, samples[:-1])
    rights = rights_at(fine)
    lefts = lefts_at(fine)
    low = np.minimum(np.minimum.reduceat(rights[:-1], starts), np.minimum.reduceat(lefts[1:], starts))
    high = np.maximum(np.maximum.reduceat(rights[:-1], starts), np.maximum.reduceat(lefts[1:], starts))
    return low, high


def _distance_to_range(values: np.ndarray, low: np.ndarray, high: np.ndarray) -> np.ndarray:
    v = values[:, None]
    return np.maximum(np.maximum(low[None, :] - v, v - high[None, :]), 0.0)


def sampled_cost_matrices(x: Turbofunction, y: Turbofunction, grid: float, max_samples: int):
    """
    Value and time cost matrices of the sampled-sup relaxation.

    Row a is the a-th sample time of y, column b the b-th sample interval of x.
    The first row may only use the first interval and the last row only the last,
    with the exact endpoint mismatch as cost.

    Returns:
        Tuple[np.ndarray, np.ndarray]: (value costs, time costs).
    """
    t_samples = sample_times(y, grid, max_samples)
    u_samples = sample_times(x, grid, max_samples)
    f_low, f_high = _interval_ranges(x.F.times, x.F.values_at, x.F.left_limits_at, u_samples)
    s_low, s_high = _interval_ranges(x.sigma.times, x.sigma.values_at, x.sigma.values_at, u_samples)
    cost_value = _distance_to_range(y.F.values_at(t_samples), f_low, f_high)
    cost_time = _distance_to_range(y.sigma.values_at(t_samples), s_low, s_high)

    cost_value[0, 1:] = np.inf
    cost_value[-1, :-1] = np.inf
    cost_value[-1, -1] = abs(x.F.evaluate(1.0) - y.F.evaluate(1.0))
    cost_value[0, 0] = abs(x.F.evaluate(0.0) - y.F.evaluate(0.0))
    return cost_value, cost_time


def bottleneck_value(cost_value: np.ndarray, cost_time: np.ndarray, budget: float) -> float:
    """
    Smallest achievable max value cost over monotone assignments whose time costs stay within budget.

    Args:
        cost_value (np.ndarray): Value costs, samples by intervals.
        cost_time (np.ndarray): Time costs, same shape.
        budget (float): Time budget.

    Returns:
        float: The bottleneck value, infinite when no assignment fits.
    """
    allowed = cost_time <= budget
    best = np.where(allowed[0], cost_value[0], np.inf)
    for a in range(1, cost_value.shape[0]):
        reachable = np.minimum.accumulate(best)
        best = np.where(allowed[a], np.maximum(cost_value[a], reachable), np.inf)
    return float(best[-1])


def sampled_sup_lower_bound(
    x: Turbofunction,
    y: Turbofunction,
    grid: float,
    upper: float,
    ladder_size: int = 16,
    max_samples: int = 512,
) -> float:
    """
    Lower bound of the semi-distance from the sampled-sup relaxation.

    For time budgets 0 = λ_0 < ... < λ_K = upper, an assignment whose largest time
    cost lies in (λ_k, λ_{k+1}] costs at least λ_k + g(λ_{k+1}), where g is the
    bottleneck value.

    Args:
        x (Turbofunction): Turbofunction composed with the warp.
        y (Turbofunction): Turbofunction compared against.
        grid (float): Uniform sampling step added to the node times.
        upper (float): A known upper bound; the result never exceeds it.
        ladder_size (int): Number of ladder intervals.
        max_samples (int): Cap on samples per axis.

    Returns:
        float: The lower bound.
    """
    if upper <= 0.0:
        return 0.0
    cost_value, cost_time = sampled_cost_matrices(x, y, grid, max_samples)
    ladder = np.linspace(0.0, upper, ladder_size + 1)
    values = [bottleneck_value(cost_value, cost_time, budget) for budget in ladder]
    bound = min(upper, values[0])
    for k in range(len(ladder) - 1):
        bound = min(bound, ladder[k] + values[k + 1])
    logger.debug("Sampled-sup bound %.6g on %d x %d samples", bound, *cost_value.shape)
    return float(max(bound, 0.0))


def sampling_resolution(x: Turbofunction, y: Turbofunction, grid: float, max_samples: int) -> float:
    """Largest gap between consecutive sample times on either axis after thinning."""
    return float(max(
        np.max(np.diff(sample_times(x, grid, max_samples))),
        np.max(np.diff(sample_times(y, grid, max_samples))),
    ))


def _time_floor(probe: BudgetProbe) -> float:
    return np.inf if probe.exhausted else probe.infeasible_time


def frontier_lower_bound(probes: Iterable[BudgetProbe], upper: float) -> float:
    """
    Lower bound from probed value budgets.

    A warp with value mismatch V in (ev_k, ev_{k+1}] satisfies the budgets
    (ev_{k+1}, T) for its time mismatch T, so T exceeds the certified infeasible
    time budget of ev_{k+1}. An exhausted probe rules out every V up to its budget.

    Args:
        probes (Iterable[BudgetProbe]): Probes including one at ev = 0.
        upper (float): A known upper bound.

    Returns:
        float: The lower bound.
    """
    ordered = sorted(probes, key=lambda p: p.eps_value)
    if not ordered:
        return 0.0
    bound = min(upper, _time_floor(ordered[0]), ordered[-1].eps_value)
    for previous, current in zip(ordered, ordered[1:]):
        bound = min(bound, previous.eps_value + _time_floor(current))
    return float(max(bound, 0.0))
