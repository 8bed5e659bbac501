"""
Module: canonical

Canonical representatives of turbofunctions up to reparametrization.

The parameter is replaced by a normalized "mass" ψ that grows with real time,
with the continuous variation of F and with a unit of mass on every piece where
F sits at a value it can only reach between two jumps. Pieces where nothing
moves and nothing is lost collapse to a point. Two reparametrizations of the
same turbofunction have the same canonical form.

Example:
    >>> from src.turbo import canonicalize, unit_constant_pair
    >>> x, y = unit_constant_pair()
    >>> canonicalize(x) == canonicalize(y)
    True

Dependencies:
    - numpy
    - src.piecewise
"""

import logging
from typing import List, Tuple

import numpy as np

from src.piecewise import NODE_TOLERANCE, CadlagFunction, TimeChange, time_change_from_cadlag
from src.turbo.turbofunction import Turbofunction
from src.turbo.visualization import visualize_pair

logger = logging.getLogger(__name__)


def _pinned_pieces(x: Turbofunction, grid: np.ndarray, tolerance: float) -> List[Tuple[int, int]]:
    """
    Maximal runs of grid segments on which both F and σ are constant, as grid
    index pairs (first, last). A run is kept when F jumps at both ends, with t=0
    and t=1 standing in for a jump at the end they touch.
    """
    F, sigma = x.F, x.sigma
    starts = grid[:-1]
    ends = grid[1:]
    f_flat = np.abs(F.left_limits_at(ends) - F.values_at(starts)) <= tolerance
    s_flat = np.abs(sigma.values_at(ends) - sigma.values_at(starts)) <= tolerance
    still = f_flat & s_flat
    jumps = np.abs(F.values_at(grid) - F.left_limits_at(grid)) > tolerance
    jumps[0] = False

    pieces = []
    i = 0
    while i < len(still):
        if not still[i]:
            i += 1
            continue
        j = i
        while j + 1 < len(still) and still[j + 1] and not jumps[j + 1]:
            j += 1
        pieces.append((i, j + 1))
        i = j + 1
    last = len(grid) - 1
    return [
        (a, b) for a, b in pieces
        if (a == 0 or jumps[a]) and (b == last or jumps[b]) and (jumps[a] or jumps[b])
    ]


def reparametrization_mass(x: Turbofunction, tolerance: float = NODE_TOLERANCE) -> TimeChange:
    """
    The canonical reparametrization ψ of x as a time change.

    ψ is proportional to σ plus the continuous variation of F plus one unit of
    mass spread evenly over every still piece bounded by jumps of F, where t=0
    and t=1 count as jumps at the ends. It is flat exactly on the remaining
    still pieces.

    Args:
        x (Turbofunction): The turbofunction.
        tolerance (float): Flatness tolerance.

    Returns:
        TimeChange: ψ.
    """
    grid = np.union1d(x.F.times, x.sigma.times)
    mass = x.sigma.values_at(grid) + x.F.variation_at(grid, include_jumps=False)
    pinned = _pinned_pieces(x, grid, tolerance)
    pinned_mass = np.zeros_like(grid)
    for a, b in pinned:
        span = grid[b] - grid[a]
        inside = np.arange(a, b + 1)
        pinned_mass[inside] += (grid[inside] - grid[a]) / span
        pinned_mass[b + 1:] += 1.0
    mass = mass + pinned_mass
    return TimeChange(grid, mass / mass[-1])


def canonicalize(x: Turbofunction, tolerance: float = NODE_TOLERANCE) -> Turbofunction:
    """
    Canonical representative (F∘ψ⁻¹, σ∘ψ⁻¹) of x.

    The result is a fixed point of canonicalize and keeps the continuity flag of x.

    Args:
        x (Turbofunction): The turbofunction.
        tolerance (float): Node tolerance.

    Returns:
        Turbofunction: The canonical form.
    """
    psi = reparametrization_mass(x, tolerance)
    if psi.deviation_from_identity() <= tolerance:
        return x
    F = visualize_pair(x.F, psi)
    sigma_curve = visualize_pair(CadlagFunction.from_points(x.sigma.times, x.sigma.values), psi)
    sigma = time_change_from_cadlag(sigma_curve)
    logger.debug("Canonical form has %d function nodes and %d time-change nodes", F.size, sigma.size)
    return Turbofunction(F, sigma)
