"""
Module: visualization

The right-continuous inverse of a time change, the visualization F∘σ⁻¹ of a
turbofunction and the instantons that the visualization skips.

All three are computed on the node structure: between consecutive levels that
come from nodes of σ or images of nodes of F the visualization is affine.

Example:
    >>> from src.turbo import paper_limit, visualize, instantons
    >>> visualize(paper_limit()).value_range()
    (0.0, 0.0)
    >>> [i.s for i in instantons(paper_limit())]
    [0.5]

Dependencies:
    - numpy
    - src.piecewise
"""

import logging
from typing import List, Tuple

import numpy as np

from src.piecewise import CadlagFunction, TimeChange, restrict
from src.turbo.turbofunction import Instanton, Turbofunction, embed, sigma_delta

logger = logging.getLogger(__name__)


def _level_preimages(sigma: TimeChange, f_times: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Levels at which σ⁻¹∘F can bend or jump, with the max and min preimage of each.

    Preimages of levels that come from strictly increasing parts of σ at a node
    of F are taken to be that node exactly.
    """
    f_levels = sigma.values_at(f_times)
    levels = np.union1d(sigma.values, f_levels)
    t_max = sigma.preimage_max(levels)
    t_min = sigma.preimage_min(levels)
    off_nodes = ~np.isin(f_levels, sigma.values)
    if np.any(off_nodes):
        position = np.searchsorted(levels, f_levels[off_nodes])
        t_max[position] = f_times[off_nodes]
        t_min[position] = f_times[off_nodes]
    return levels, t_max, t_min


def right_continuous_inverse(sigma: TimeChange) -> CadlagFunction:
    """
    σ⁻¹(s) = max{t : σ(t) <= s} as a non-decreasing càdlàg function.

    It jumps exactly at the levels of the flat pieces of σ, from the left end of
    the flat to its right end.

    Args:
        sigma (TimeChange): The time change to invert.

    Returns:
        CadlagFunction: The right-continuous inverse.
    """
    levels = np.asarray(sigma.values)
    levels = np.unique(levels)
    rights = sigma.preimage_max(levels)
    lefts = sigma.preimage_min(levels)
    lefts[0] = rights[0]
    return CadlagFunction(zip(levels, lefts, rights))


def visualize_pair(F: CadlagFunction, sigma: TimeChange) -> CadlagFunction:
    """F∘σ⁻¹ for a function and a time change sharing the parameter interval."""
    levels, t_max, t_min = _level_preimages(sigma, F.times)
    rights = F.values_at(t_max)
    lefts = F.left_limits_at(t_min)
    lefts[0] = rights[0]
    return CadlagFunction(zip(levels, lefts, rights))


def visualize(x: Turbofunction) -> CadlagFunction:
    """
    The ordinary function F∘σ⁻¹ obtained through the right-continuous inverse.

    Args:
        x (Turbofunction): The turbofunction to visualize.

    Returns:
        CadlagFunction: The visualization; instantons collapse to jumps.
    """
    return visualize_pair(x.F, x.sigma)


def instantons(x: Turbofunction) -> List[Instanton]:
    """
    One Instanton per maximal flat piece of σ, ordered by level.

    Args:
        x (Turbofunction): The turbofunction to inspect.

    Returns:
        List[Instanton]: Empty iff σ is strictly increasing.
    """
    found = []
    for a, b, level in x.sigma.flat_intervals:
        trace = restrict(x.F, a, b)
        found.append(Instanton(s=level, t_interval=(a, b), value_range=trace.value_range(), trace=trace))
    logger.debug("Found %d instanton(s)", len(found))
    return found


def hat_plus(x: Turbofunction) -> Turbofunction:
    """
    The embedded visualization embed(visualize(x)).

    For strictly increasing σ this is a reparametrization of x; otherwise the
    instantons are lost.
    """
    return embed(visualize(x))


def dense_approximation(x: Turbofunction, delta: float) -> Turbofunction:
    """
    An embedded ordinary function within semi-distance δ of x.

    Regularizes σ to (1 - δ)σ + δ·t and embeds the visualization of the result.

    Raises:
        PreconditionError: If δ is not in (0,1).
    """
    return hat_plus(Turbofunction(x.F, sigma_delta(x.sigma, delta)))
