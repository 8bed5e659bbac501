"""
Module: equivalence

Three-valued equivalence test for turbofunctions.

"equivalent" is answered only when the canonical forms agree, which proves a
vanishing semi-distance; "not-equivalent" only when a certified lower bound of
the semi-distance is positive. Everything in between is "unknown".

Example:
    >>> from src.turbo import unit_constant_pair
    >>> from src.turbo.equivalence import is_equivalent
    >>> is_equivalent(*unit_constant_pair()).decision.value
    'equivalent'

Dependencies:
    - numpy
    - src.metric
"""

import logging
from typing import Optional

import numpy as np

from src.metric import rho_plus_bounds
from src.models.config import DEFAULT_SOLVER, SolverConfig
from src.models.report import EquivalenceDecision, EquivalenceReport, NodeDifference
from src.turbo.canonical import canonicalize
from src.turbo.turbofunction import Turbofunction

logger = logging.getLogger(__name__)


def canonical_difference(x: Turbofunction, y: Turbofunction) -> float:
    """Largest node-wise difference of two normalized turbofunctions; infinite when node counts differ."""
    if x.F.size != y.F.size or x.sigma.size != y.sigma.size:
        return float("inf")
    return float(max(
        np.max(np.abs(x.F.times - y.F.times)),
        np.max(np.abs(x.F.lefts - y.F.lefts)),
        np.max(np.abs(x.F.rights - y.F.rights)),
        np.max(np.abs(x.sigma.times - y.sigma.times)),
        np.max(np.abs(x.sigma.values - y.sigma.values)),
    ))


def first_difference(x: Turbofunction, y: Turbofunction, tolerance: float) -> Optional[NodeDifference]:
    """First node, F before σ, at which two normalized turbofunctions differ by more than tolerance."""
    for component, x_nodes, y_nodes in (("F", x.F.nodes, y.F.nodes), ("sigma", x.sigma.nodes, y.sigma.nodes)):
        for index in range(max(len(x_nodes), len(y_nodes))):
            a = x_nodes[index] if index < len(x_nodes) else None
            b = y_nodes[index] if index < len(y_nodes) else None
            if a is None or b is None or max(abs(u - v) for u, v in zip(a, b)) > tolerance:
                return NodeDifference(component=component, index=index, x_node=a, y_node=b)
    return None


def is_equivalent(x: Turbofunction, y: Turbofunction, settings: SolverConfig = DEFAULT_SOLVER) -> EquivalenceReport:
    """
    Decides x ≡ y where it can.

    Args:
        x (Turbofunction): First turbofunction.
        y (Turbofunction): Second turbofunction.
        settings (SolverConfig): Node tolerance, bound tolerance and decision threshold.

    Returns:
        EquivalenceReport: The decision with the canonical difference and, when
        the canonical forms differ, the first differing node and the semi-distance bounds.
    """
    x_form = canonicalize(x, settings.node_tolerance)
    y_form = canonicalize(y, settings.node_tolerance)
    difference = canonical_difference(x_form, y_form)
    if difference <= settings.node_tolerance:
        logger.info("Canonical forms agree (difference %.3g)", difference)
        return EquivalenceReport(decision=EquivalenceDecision.EQUIVALENT, canonical_difference=difference)

    certificate = rho_plus_bounds(x, y, settings.tolerance, settings)
    if certificate.lower > settings.equivalence_threshold:
        decision = EquivalenceDecision.NOT_EQUIVALENT
    else:
        decision = EquivalenceDecision.UNKNOWN
    logger.info("Equivalence decision %s (lower bound %.6g)", decision.value, certificate.lower)
    return EquivalenceReport(
        decision=decision,
        canonical_difference=difference,
        lower_bound=certificate.lower,
        upper_bound=certificate.upper,
        first_difference=first_difference(x_form, y_form, settings.node_tolerance),
    )
