"""
Module: cauchy

Limits of Cauchy sequences of turbofunctions.

A finite prefix of a Cauchy sequence comes with certified upper bounds of the
semi-distance between consecutive items. A subsequence whose tails halve is
selected; consecutive selected items are linked by witness warps γ_k, and the
compositions λ_{k+1} = γ_k∘λ_k reparametrize the last selected item into the
limit representative.

Example:
    >>> from src.completion import CauchySequence, cauchy_limit
    >>> seq = CauchySequence.build(items, tol=1e-3)
    >>> report = cauchy_limit(seq, tol=1e-3)

Dependencies:
    - numpy
    - src.metric
"""

import logging
import math
from typing import List, Sequence

import numpy as np

from src.errors.core import CauchyConvergenceError, PreconditionError
from src.metric import rho_plus_bounds
from src.models.config import DEFAULT_SOLVER, SolverConfig
from src.models.report import LimitReport
from src.piecewise import Homeomorphism, compose_homeo
from src.turbo import Turbofunction, reparametrize

logger = logging.getLogger(__name__)


class CauchySequence:
    """
    A finite prefix of a Cauchy sequence with certified gap bounds.

    Attributes:
        items (List[Turbofunction]): The prefix.
        gap_bounds (List[float]): gap_bounds[k] bounds ρ⁺(items[k], items[k+1]) from above.
        tail_bound (float): Bound on the semi-distance from the last item to any later one.
    """

    def __init__(self, items: Sequence[Turbofunction], gap_bounds: Sequence[float], tail_bound: float = 0.0):
        self.logger = logging.getLogger(__name__)
        if not items:
            raise PreconditionError("A Cauchy sequence needs at least one item")
        if len(gap_bounds) != len(items) - 1:
            raise PreconditionError(f"Expected {len(items) - 1} gap bounds, got {len(gap_bounds)}")
        for k, bound in enumerate(list(gap_bounds) + [tail_bound]):
            if not (math.isfinite(bound) and bound >= 0.0):
                raise CauchyConvergenceError(f"Gap bound {k} is not a finite non-negative number: {bound}")
        self.items = list(items)
        self.gap_bounds = [float(b) for b in gap_bounds]
        self.tail_bound = float(tail_bound)

    @classmethod
    def build(
        cls,
        items: Sequence[Turbofunction],
        tol: float,
        tail_bound: float = 0.0,
        settings: SolverConfig = DEFAULT_SOLVER,
    ) -> "CauchySequence":
        """
        Certifies the gaps of a prefix with rho_plus_bounds.

        Args:
            items (Sequence[Turbofunction]): The prefix.
            tol (float): Overall tolerance; each gap is solved to tol / (4 * gaps).
            tail_bound (float): Bound beyond the prefix.
            settings (SolverConfig): Solver settings.
        """
        if not tol > 0.0:
            raise PreconditionError(f"Tolerance must be positive, got {tol}")
        gap_tol = tol / (4.0 * max(1, len(items) - 1))
        bounds = []
        for k in range(len(items) - 1):
            certificate = rho_plus_bounds(items[k], items[k + 1], gap_tol, settings)
            bounds.append(certificate.upper)
            logger.debug("Gap %d certified <= %.9g", k, certificate.upper)
        return cls(items, bounds, tail_bound)

    def __len__(self) -> int:
        return len(self.items)

    def gap_bound(self, k: int) -> float:
        return self.gap_bounds[k]

    @property
    def tails(self) -> np.ndarray:
        """tails[i] bounds the semi-distance from items[i] to every later item and to the limit."""
        suffix = np.cumsum(self.gap_bounds[::-1])[::-1] if self.gap_bounds else np.array([])
        return np.concatenate((suffix, [0.0])) + self.tail_bound

    @property
    def continuous(self) -> bool:
        return all(item.is_continuous for item in self.items)


def select_subsequence(tails: np.ndarray, tol: float) -> List[int]:
    """
    Indices n_0 = 0 < n_1 < ... with tails[n_{k+1}] < tails[n_k] / 2, stopping at
    the first index whose tail is within tol / 2.
    """
    indices = [0]
    while tails[indices[-1]] > tol / 2.0:
        current = indices[-1]
        later = [j for j in range(current + 1, len(tails)) if tails[j] < tails[current] / 2.0]
        indices.append(later[0] if later else len(tails) - 1)
        if indices[-1] == len(tails) - 1:
            break
    return indices


def cauchy_limit(
    seq: CauchySequence,
    tol: float,
    settings: SolverConfig = DEFAULT_SOLVER,
) -> LimitReport:
    """
    Constructs a limit representative of a Cauchy sequence.

    Args:
        seq (CauchySequence): Items with certified gap bounds.
        tol (float): Bound required on the residual.
        settings (SolverConfig): Solver settings.

    Returns:
        LimitReport: The limit, its certified residual and bookkeeping.

    Raises:
        PreconditionError: If tol <= 0.
        CauchyConvergenceError: If the gap bounds cannot certify a residual within tol.
    """
    if not tol > 0.0:
        raise PreconditionError(f"Tolerance must be positive, got {tol}")
    tails = seq.tails
    if seq.tail_bound >= tol / 2.0:
        raise CauchyConvergenceError(
            f"Tail bound {seq.tail_bound:.6g} beyond the prefix is not below tol/2 = {tol / 2.0:.6g}"
        )

    indices = select_subsequence(tails, tol)
    logger.info("Selected subsequence %s with tails %s", indices, [float(tails[i]) for i in indices])

    warp: Homeomorphism = Homeomorphism.identity()
    slack = 0.0
    for k, (current, following) in enumerate(zip(indices, indices[1:])):
        step_tol = max(tol * 2.0 ** (-(k + 2)), 1e-9)
        certificate = rho_plus_bounds(seq.items[following], seq.items[current], step_tol, settings)
        budget = float(tails[current] - tails[following])
        slack += max(0.0, certificate.upper - budget)
        warp = compose_homeo(certificate.witness, warp)
        logger.debug(
            "Step %d: items %d -> %d, objective %.9g vs gap budget %.9g",
            k, current, following, certificate.upper, budget,
        )

    last = indices[-1]
    residual = float(tails[last]) + slack
    if residual > tol:
        raise CauchyConvergenceError(
            f"Residual {residual:.6g} exceeds tolerance {tol:.6g}; supply a longer prefix or a smaller tail bound"
        )
    limit = reparametrize(seq.items[last], warp)
    return LimitReport(
        limit=limit,
        residual=residual,
        levels_used=len(indices) - 1,
        continuous=seq.continuous,
        indices=indices,
        slack=slack,
    )
