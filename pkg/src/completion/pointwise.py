"""
Module: pointwise

Pointwise behaviour of visualizations along a Cauchy sequence.

Visualizations converge at s = 1 and at every s where the inverse time change
of the limit is continuous and F is continuous at the preimage. For piecewise
linear data the remaining, exceptional, times are the levels of flat pieces of
σ and the images of jumps of F; they are classified but no convergence is
claimed there.

Dependencies:
    - numpy
    - src.turbo
"""

import logging
from typing import Iterable

import numpy as np

from src.errors.core import DomainError
from src.models.report import PointClass, PointwiseEntry, PointwiseReport
from src.turbo import Turbofunction, visualize
from src.completion.cauchy import CauchySequence

logger = logging.getLogger(__name__)

LEVEL_TOLERANCE = 1e-12


def classify_time(limit: Turbofunction, s: float) -> PointClass:
    """
    Classifies a real time against the limit turbofunction.

    Raises:
        DomainError: If s lies outside [0,1].
    """
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"s={s} lies outside [0,1]")
    if s == 1.0:
        return PointClass.ENDPOINT_1
    if any(abs(level - s) <= LEVEL_TOLERANCE for _, _, level in limit.sigma.flat_intervals):
        return PointClass.EXCEPTIONAL
    t = float(limit.sigma.preimage_max(np.array([s]))[0])
    jumps = limit.F.jump_times
    if jumps.size and np.min(np.abs(jumps - t)) <= LEVEL_TOLERANCE:
        return PointClass.EXCEPTIONAL
    return PointClass.GOOD


def pointwise_check(
    seq: CauchySequence,
    limit: Turbofunction,
    s_grid: Iterable[float],
    tol: float = 1e-6,
) -> PointwiseReport:
    """
    Deviation of each item's visualization from the limit's, per real time.

    Times are classified against the representative passed as `limit`. The one
    cauchy_limit returns is the last selected item under a homeomorphism, so it
    pauses only where that item pauses; a flat piece that appears only in the
    limit, such as the instanton of paper_limit(), is seen by passing the
    closed form instead.

    Args:
        seq (CauchySequence): The sequence.
        limit (Turbofunction): The limit representative to classify against.
        s_grid (Iterable[float]): Times to inspect.
        tol (float): Tolerance for the "converged" flag.

    Returns:
        PointwiseReport: One entry per time.

    Raises:
        DomainError: If a time lies outside [0,1].
    """
    times = [float(s) for s in s_grid]
    for s in times:
        if not 0.0 <= s <= 1.0:
            raise DomainError(f"s={s} lies outside [0,1]")
    limit_curve = visualize(limit)
    item_curves = [visualize(item) for item in seq.items]

    entries = []
    for s in times:
        classification = classify_time(limit, s)
        if classification == PointClass.EXCEPTIONAL:
            entries.append(PointwiseEntry(s=s, classification=classification))
            continue
        target = limit_curve.evaluate(s)
        deviations = [abs(curve.evaluate(s) - target) for curve in item_curves]
        tail = deviations[-max(1, len(deviations) // 3):]
        entries.append(PointwiseEntry(
            s=s,
            classification=classification,
            deviations=deviations,
            tail_max=max(tail),
            decreasing=all(b <= a + LEVEL_TOLERANCE for a, b in zip(tail, tail[1:])),
            converged=deviations[-1] <= tol,
        ))
    logger.info("Pointwise check on %d time(s)", len(entries))
    return PointwiseReport(entries=entries, tolerance=tol)
