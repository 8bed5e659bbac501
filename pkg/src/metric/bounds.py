"""
Module: bounds

Certified bounds of the Skorokhod semi-distance between turbofunctions,

    ρ⁺(x, y) = inf over γ of sup|F1∘γ - F2| + sup|σ1∘γ - σ2|,

and, through the embedding f ↦ (f, id), of the Skorokhod distance between
ordinary functions.

The search walks a ladder of value budgets. For each budget the exact decision
procedure is bisected over the time budget, which yields a witness (upper
bound) and a certified infeasible time budget (lower bound). On every level the
value intervals whose frontier term is weakest are split until the frontier
meets the upper bound within tol/2 or the level's probe budget is spent, and the
sampling grid of the sampled-sup relaxation is halved.

Example:
    >>> from src.metric import rho_plus_bounds
    >>> certificate = rho_plus_bounds(x, y, tol=1e-4)
    >>> certificate.lower <= certificate.upper
    True

Dependencies:
    - numpy
    - src.models
    - src.turbo
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from src.errors.core import PreconditionError
from src.models.certificate import BudgetProbe, DistanceCertificate, RefinementLevel, ThresholdQuery
from src.models.config import DEFAULT_SOLVER, SolverConfig
from src.piecewise import CadlagFunction, Homeomorphism
from src.turbo import Turbofunction, embed
from src.metric.freespace import FreeSpaceDiagram, witness_objective
from src.metric.lower_bound import (
    frontier_lower_bound,
    sample_times,
    sampled_sup_lower_bound,
    sampling_resolution,
)

logger = logging.getLogger(__name__)

EXACT_GAP = 1e-9
# sup|σ1∘γ - σ2| never exceeds 1, so a time budget of 1 only constrains the values
MAX_TIME_BUDGET = 1.0

Bracket = Tuple[float, Optional[float], Optional[float]]


def rho_plus_decision(
    x: Turbofunction,
    y: Turbofunction,
    query: ThresholdQuery,
    h: float,
    settings: SolverConfig = DEFAULT_SOLVER,
) -> bool:
    """
    Decides whether some warp meets both budgets.

    The h-grid subdivides the cells of the free-space diagram; the answer is
    exact for every h, so infeasible answers are certified as well. Grids finer
    than settings.min_decision_grid are coarsened to it, which leaves the answer
    unchanged and keeps the diagram size bounded.

    Args:
        x (Turbofunction): Turbofunction composed with the warp.
        y (Turbofunction): Turbofunction compared against.
        query (ThresholdQuery): Value and time budgets.
        h (float): Grid resolution.
        settings (SolverConfig): Solver settings.

    Returns:
        bool: True iff feasible.

    Raises:
        PreconditionError: If h <= 0.
    """
    if not h > 0.0:
        raise PreconditionError(f"Grid resolution must be positive, got {h}")
    grid = min(max(h, settings.min_decision_grid), 1.0)
    if grid != h:
        logger.debug("Decision grid %g used for requested resolution %g", grid, h)
    diagram = FreeSpaceDiagram(x, y, grid=grid, slack=settings.numeric_slack)
    return diagram.decide(query.eps_value, query.eps_time)


class _BoundSearch:
    """Mutable state of one rho_plus_bounds run."""

    def __init__(self, x: Turbofunction, y: Turbofunction, tol: float, settings: SolverConfig):
        self.x, self.y = x, y
        self.tol = tol
        self.resolution = tol / 8.0
        self.settings = settings
        self.diagram = FreeSpaceDiagram(x, y, grid=settings.decision_grid, slack=settings.numeric_slack)
        self.witness = Homeomorphism.identity()
        self.upper = float(sum(witness_objective(x, y, self.witness)))
        self.probes: List[BudgetProbe] = []

    def _offer(self, witness: Homeomorphism) -> float:
        objective = float(sum(witness_objective(self.x, self.y, witness)))
        if objective < self.upper:
            self.upper, self.witness = objective, witness
        return objective

    def probe(
        self, eps_value: float, infeasible: Optional[float] = None, feasible: Optional[float] = None
    ) -> BudgetProbe:
        """
        Bisects the smallest feasible time budget for one value budget.

        Args:
            eps_value (float): The value budget.
            infeasible (Optional[float]): A time budget already known infeasible for eps_value.
            feasible (Optional[float]): A time budget already known feasible for eps_value.

        Returns:
            BudgetProbe: The certified bracket, with the objective of the witness found.
        """
        if infeasible is None:
            if self.diagram.decide(eps_value, 0.0):
                return self._record(eps_value, 0.0, 0.0)
            infeasible = 0.0
        if feasible is None:
            if not self.diagram.decide(eps_value, MAX_TIME_BUDGET):
                probe = BudgetProbe(eps_value=eps_value, infeasible_time=MAX_TIME_BUDGET, exhausted=True)
                self.probes.append(probe)
                return probe
            feasible = MAX_TIME_BUDGET
        while feasible - infeasible > self.resolution:
            middle = 0.5 * (infeasible + feasible)
            if self.diagram.decide(eps_value, middle):
                feasible = middle
            else:
                infeasible = middle
        return self._record(eps_value, infeasible, feasible)

    def _record(self, eps_value: float, infeasible: float, feasible: float) -> BudgetProbe:
        witness = self.diagram.witness(eps_value, feasible)
        probe = BudgetProbe(
            eps_value=eps_value,
            infeasible_time=infeasible,
            feasible_time=feasible,
            objective=self._offer(witness),
        )
        self.probes.append(probe)
        return probe

    def probe_ladder(self, budgets: np.ndarray) -> None:
        """Probes increasing value budgets, reusing each feasible time for the next budget."""
        feasible = None
        for eps_value in budgets:
            probe = self.probe(float(eps_value), feasible=feasible)
            if probe.feasible_time is not None:
                feasible = probe.feasible_time

    def weakest_intervals(self, target: float, count: int) -> List[Bracket]:
        """
        Midpoints of the value intervals whose frontier term lies below target, weakest first.

        Each midpoint comes with the time bracket its neighbours certify: the
        right neighbour's infeasible time and the left neighbour's feasible time.
        """
        ordered = sorted(self.probes, key=lambda p: p.eps_value)
        scored = []
        for previous, current in zip(ordered, ordered[1:]):
            if current.eps_value - previous.eps_value <= self.resolution or current.exhausted:
                continue
            term = previous.eps_value + current.infeasible_time
            if term >= target:
                continue
            infeasible = current.infeasible_time if current.feasible_time != 0.0 else None
            feasible = previous.feasible_time
            if infeasible is not None and feasible is not None and infeasible >= feasible:
                infeasible = None
            scored.append((term, 0.5 * (previous.eps_value + current.eps_value), infeasible, feasible))
        scored.sort(key=lambda entry: entry[0])
        return [(middle, infeasible, feasible) for _, middle, infeasible, feasible in scored[:count]]

    def refine_frontier(self, floor: float, budget: int) -> int:
        """
        Splits weak value intervals until the lower bound is within tol/2 of the upper bound.

        Args:
            floor (float): Lower bound known from other sources.
            budget (int): Maximum number of probes.

        Returns:
            int: Number of probes spent.
        """
        spent = 0
        while spent < budget:
            target = self.upper - 0.5 * self.tol
            if max(floor, frontier_lower_bound(self.probes, self.upper)) >= target:
                break
            weak = self.weakest_intervals(target, budget - spent)
            if not weak:
                break
            for eps_value, infeasible, feasible in weak:
                self.probe(eps_value, infeasible, feasible)
            spent += len(weak)
        return spent


def rho_plus_bounds(
    x: Turbofunction,
    y: Turbofunction,
    tol: Optional[float] = None,
    settings: SolverConfig = DEFAULT_SOLVER,
) -> DistanceCertificate:
    """
    Certified lower and upper bounds of ρ⁺(x, y) with a witness warp.

    Args:
        x (Turbofunction): Turbofunction composed with the warp.
        y (Turbofunction): Turbofunction compared against.
        tol (Optional[float]): Target gap; defaults to settings.tolerance.
        settings (SolverConfig): Solver settings.

    Returns:
        DistanceCertificate: Bounds, witness and per-level history. The grid
        resolution is the finest sampling the lower bound actually used.

    Raises:
        PreconditionError: If tol <= 0.
    """
    tol = settings.tolerance if tol is None else tol
    if not tol > 0.0:
        raise PreconditionError(f"Tolerance must be positive, got {tol}")

    search = _BoundSearch(x, y, tol, settings)
    lower = 0.0
    grid = settings.initial_grid
    history: List[RefinementLevel] = []
    sampled = 0.0
    sampled_shape = None
    resolution = 1.0

    if search.upper > tol:
        search.probe_ladder(np.linspace(0.0, search.upper, settings.ladder_size + 1))
    for level in range(settings.max_levels):
        if search.upper - lower <= tol:
            break
        if level > 0:
            grid = grid / 2.0
        shape = (
            len(sample_times(y, grid, settings.lower_bound_max_samples)),
            len(sample_times(x, grid, settings.lower_bound_max_samples)),
        )
        if shape != sampled_shape:
            sampled = sampled_sup_lower_bound(
                x, y, grid, search.upper, settings.ladder_size, settings.lower_bound_max_samples
            )
            sampled_shape = shape
            resolution = sampling_resolution(x, y, grid, settings.lower_bound_max_samples)

        search.refine_frontier(sampled, settings.probes_per_level)
        frontier = frontier_lower_bound(search.probes, search.upper)
        lower = min(max(lower, frontier, sampled), search.upper)
        history.append(RefinementLevel(
            level=level, grid=resolution, lower=lower, upper=search.upper, probes=len(search.probes)
        ))
        logger.debug(
            "Level %d (sampling %g, %d probes): lower %.9g upper %.9g",
            level, resolution, len(search.probes), lower, search.upper,
        )

    if not history:
        lower = min(max(lower, frontier_lower_bound(search.probes, search.upper)), search.upper)
        history.append(RefinementLevel(
            level=0, grid=resolution, lower=lower, upper=search.upper, probes=len(search.probes)
        ))
    gap = search.upper - lower
    logger.info(
        "rho+ bounds [%.9g, %.9g] after %d level(s) and %d probe(s)",
        lower, search.upper, len(history), len(search.probes),
    )
    return DistanceCertificate(
        lower=lower,
        upper=search.upper,
        witness=search.witness,
        grid_resolution=min(level.grid for level in history),
        exact=gap <= EXACT_GAP,
        history=history,
    )


def rho_bounds(
    f: CadlagFunction,
    g: CadlagFunction,
    tol: Optional[float] = None,
    settings: SolverConfig = DEFAULT_SOLVER,
) -> DistanceCertificate:
    """
    Certified bounds of the Skorokhod distance ρ(f, g), computed as ρ⁺(f⁺, g⁺).

    Raises:
        PreconditionError: If tol <= 0.
    """
    return rho_plus_bounds(embed(f), embed(g), tol, settings)
