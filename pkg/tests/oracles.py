"""
Brute-force Skorokhod distance of two step functions over grid homeomorphisms.

The search covers every piecewise-linear homeomorphism γ whose nodes lie on
the grid {0, 1/cells, ..., 1} in both coordinates. For step functions only the
nodes (p_i, u_i) that carry the jump times u_i of g matter: sup|id - γ| is the
largest |p_i - u_i| and g∘γ jumps exactly at the p_i. Every strictly
increasing placement of the p_i among the interior grid points is measured on
the cell midpoints and at t = 1, where all breakpoints are resolved.

The grid minimum is an objective of a real warp, so it never lies below the
distance. Let k be the number of jumps of g. When all jump times lie on the grid
and consecutive jump times of f, with 0 and 1, are more than k cells apart, it
exceeds the distance by at most k/cells. An optimal placement clamps each u_i to
its admissible interval, whose endpoints are jump times of f, 0 or 1; moving the
clamped points apart into strict grid positions costs at most one cell per jump.
"""

import itertools
from typing import Tuple

import numpy as np


def step_distance_oracle(f, g, cells: int = 64) -> Tuple[float, float]:
    """
    Returns:
        Tuple[float, float]: (grid minimum, discretization slack).
    """
    h = 1.0 / cells
    g_jumps = np.asarray(g.jump_times, dtype=float)
    levels = g.values_at(np.concatenate(([0.0], g_jumps)))
    sample_times = np.append((np.arange(cells) + 0.5) * h, 1.0)
    f_values = f.values_at(sample_times)
    if g_jumps.size == 0:
        return float(np.max(np.abs(f_values - levels[0]))), 0.0

    placements = np.array(list(itertools.combinations(range(1, cells), g_jumps.size)), dtype=float) * h
    time_part = np.max(np.abs(placements - g_jumps[None, :]), axis=1)
    counts = np.sum(placements[:, :, None] <= sample_times[None, None, :], axis=1)
    value_part = np.max(np.abs(f_values[None, :] - levels[counts]), axis=1)
    return float(np.min(value_part + time_part)), g_jumps.size * h
