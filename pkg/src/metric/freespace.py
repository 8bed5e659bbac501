"""
Module: freespace

Free-space reachability for the two-budget decision problem

    is there a homeomorphism γ with sup|F1∘γ - F2| <= eps_value
                                and sup|σ1∘γ - σ2| <= eps_time ?

The unit square is cut into cells by the node times of y (columns, the domain
of γ) and of x (rows, its range). Inside a cell both functions and both time
changes are affine, so the set of admissible points is convex; a cell edge
belongs to two cells and is admissible where both one-sided conditions hold.
Following Alt and Godau, each cell keeps the lowest reachable point on its left
edge and on its bottom edge; a path may also pass a cell corner diagonally,
which is how jumps of F1 and F2 are aligned.

Example:
    >>> from src.metric.freespace import FreeSpaceDiagram
    >>> diagram = FreeSpaceDiagram(x, y)
    >>> diagram.decide(0.0, 0.1)
    True

Dependencies:
    - numpy
    - src.piecewise
    - src.turbo
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from src.piecewise import Homeomorphism, composed_map_distance, composed_sup_distance
from src.turbo import Turbofunction

logger = logging.getLogger(__name__)

WITNESS_STEP = 1e-11
WITNESS_TOLERANCE = 1e-13

_NONE, _FROM_LEFT, _DIAGONAL, _START = 0, 1, 2, 3


def uniform_grid(step: float) -> np.ndarray:
    """Points 0, h, 2h, ... on [0,1], always including 1."""
    count = max(1, int(round(1.0 / step)))
    return np.linspace(0.0, 1.0, count + 1)


def _free_interval(c0: np.ndarray, c1: np.ndarray, eps: float) -> Tuple[np.ndarray, np.ndarray]:
    """Where |c0 + c1·x| <= eps on [0,1], as (lo, hi) arrays; empty where lo > hi."""
    flat = c1 == 0.0
    safe = np.where(flat, 1.0, c1)
    r1 = (-eps - c0) / safe
    r2 = (eps - c0) / safe
    inside = np.abs(c0) <= eps
    lo = np.where(flat, np.where(inside, 0.0, 2.0), np.minimum(r1, r2))
    hi = np.where(flat, np.where(inside, 1.0, -1.0), np.maximum(r1, r2))
    return np.maximum(lo, 0.0), np.minimum(hi, 1.0)


def witness_objective(x: Turbofunction, y: Turbofunction, gamma: Homeomorphism) -> Tuple[float, float]:
    """
    The two suprema of the semi-distance objective for a given time warp.

    Args:
        x (Turbofunction): Turbofunction composed with γ.
        y (Turbofunction): Turbofunction compared against.
        gamma (Homeomorphism): The time warp.

    Returns:
        Tuple[float, float]: (sup|F1∘γ - F2|, sup|σ1∘γ - σ2|).
    """
    return (
        composed_sup_distance(x.F, gamma, y.F),
        composed_map_distance(x.sigma, gamma, y.sigma),
    )


class FreeSpaceDiagram:
    """
    Cell structure of the decision problem for a fixed pair (x, y).

    The structure does not depend on the budgets, so one diagram answers any
    number of decide() and witness() calls.

    Attributes:
        rows (np.ndarray): Cell boundaries along the parameter of x.
        cols (np.ndarray): Cell boundaries along the parameter of y.
        slack (float): Absolute slack added to both budgets.
    """

    def __init__(self, x: Turbofunction, y: Turbofunction, grid: float = 1.0, slack: float = 1e-12):
        self.logger = logging.getLogger(__name__)
        extra = uniform_grid(grid)
        self.rows = np.union1d(np.union1d(x.F.times, x.sigma.times), extra)
        self.cols = np.union1d(np.union1d(y.F.times, y.sigma.times), extra)
        self.slack = slack

        lower, upper = self.rows[:-1], self.rows[1:]
        self._row_f = (x.F.values_at(lower), x.F.left_limits_at(upper))
        self._row_s = (x.sigma.values_at(lower), x.sigma.values_at(upper))
        left, right = self.cols[:-1], self.cols[1:]
        self._col_f = (y.F.values_at(left), y.F.left_limits_at(right))
        self._col_s = (y.sigma.values_at(left), y.sigma.values_at(right))
        self._terminal_gap = abs(x.F.evaluate(1.0) - y.F.evaluate(1.0))
        self.logger.debug("Free-space diagram with %d x %d cells", len(lower), len(left))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows) - 1, len(self.cols) - 1

    def _edges(self, row: Tuple[np.ndarray, np.ndarray], col: Tuple[np.ndarray, np.ndarray], eps: float):
        a, b = row[0][:, None], row[1][:, None]
        c, d = col[0][None, :], col[1][None, :]
        slope_row = np.broadcast_to(b - a, (a.shape[0], c.shape[1]))
        slope_col = np.broadcast_to(c - d, (a.shape[0], c.shape[1]))
        return {
            "left": _free_interval(a - c, slope_row, eps),
            "right": _free_interval(a - d, slope_row, eps),
            "bottom": _free_interval(a - c, slope_col, eps),
            "top": _free_interval(b - c, slope_col, eps),
        }

    def _free_edges(self, eps_value: float, eps_time: float):
        value = self._edges(self._row_f, self._col_f, eps_value + self.slack)
        time = self._edges(self._row_s, self._col_s, eps_time + self.slack)
        return {
            side: (np.maximum(value[side][0], time[side][0]), np.minimum(value[side][1], time[side][1]))
            for side in value
        }

    def _propagate(self, edges):
        n, m = self.shape
        left_lo, left_hi = edges["left"]
        right_lo, right_hi = edges["right"]
        bottom_lo, bottom_hi = edges["bottom"]
        top_lo, top_hi = edges["top"]
        corner_out = (right_lo <= 1.0) & (right_hi >= 1.0)
        corner_in = (left_lo <= 0.0) & (left_hi >= 0.0)

        entry_left = np.full((n, m), np.inf)
        entry_bottom = np.full((n, m), np.inf)
        source = np.zeros((n, m), dtype=int)
        if corner_in[0, 0]:
            entry_left[0, 0] = 0.0
            source[0, 0] = _START

        for i in range(n):
            for j in range(m):
                has_left = entry_left[i, j] < np.inf
                has_bottom = entry_bottom[i, j] < np.inf
                if not (has_left or has_bottom):
                    continue
                if j + 1 < m:
                    floor = 0.0 if has_bottom else entry_left[i, j]
                    lo = max(right_lo[i, j], left_lo[i, j + 1], floor)
                    hi = min(right_hi[i, j], left_hi[i, j + 1])
                    if lo <= hi and lo < entry_left[i, j + 1]:
                        entry_left[i, j + 1] = lo
                        source[i, j + 1] = _FROM_LEFT
                if i + 1 < n:
                    floor = 0.0 if has_left else entry_bottom[i, j]
                    lo = max(top_lo[i, j], bottom_lo[i + 1, j], floor)
                    hi = min(top_hi[i, j], bottom_hi[i + 1, j])
                    if lo <= hi and lo < entry_bottom[i + 1, j]:
                        entry_bottom[i + 1, j] = lo
                if i + 1 < n and j + 1 < m and corner_out[i, j] and corner_in[i + 1, j + 1]:
                    if entry_left[i + 1, j + 1] > 0.0:
                        entry_left[i + 1, j + 1] = 0.0
                        source[i + 1, j + 1] = _DIAGONAL
        return entry_left, entry_bottom, source, corner_out

    def _reaches_end(self, eps_value: float, entry_left, entry_bottom, corner_out) -> bool:
        if self._terminal_gap > eps_value + self.slack:
            return False
        n, m = self.shape
        reached = entry_left[n - 1, m - 1] < np.inf or entry_bottom[n - 1, m - 1] < np.inf
        return bool(reached and corner_out[n - 1, m - 1])

    def decide(self, eps_value: float, eps_time: float) -> bool:
        """
        Whether a monotone path through the free space joins (0,0) to (1,1).

        Args:
            eps_value (float): Budget for the function mismatch.
            eps_time (float): Budget for the time mismatch.

        Returns:
            bool: True iff the budgets are feasible.
        """
        entry_left, entry_bottom, _, corner_out = self._propagate(self._free_edges(eps_value, eps_time))
        return self._reaches_end(eps_value, entry_left, entry_bottom, corner_out)

    def witness(self, eps_value: float, eps_time: float) -> Optional[Homeomorphism]:
        """
        A homeomorphism following a reachable path, or None when infeasible.

        The path crosses every cell edge at its lowest reachable point, nudged by
        WITNESS_STEP where strict monotonicity requires it.
        """
        edges = self._free_edges(eps_value, eps_time)
        entry_left, entry_bottom, source, corner_out = self._propagate(edges)
        if not self._reaches_end(eps_value, entry_left, entry_bottom, corner_out):
            return None
        moves = self._backtrack(entry_left, entry_bottom, source)
        return self._trace_path(moves, edges)

    def _backtrack(self, entry_left, entry_bottom, source) -> List[Tuple[str, int, int]]:
        n, m = self.shape
        i, j = n - 1, m - 1
        use_left = entry_left[i, j] < np.inf
        moves: List[Tuple[str, int, int]] = []
        while True:
            if use_left:
                kind = source[i, j]
                if kind == _START:
                    break
                if kind == _DIAGONAL:
                    i, j = i - 1, j - 1
                    moves.append(("diagonal", i, j))
                    use_left = entry_left[i, j] < np.inf
                else:
                    j = j - 1
                    moves.append(("right", i, j))
                    use_left = not entry_bottom[i, j] < np.inf
            else:
                i = i - 1
                moves.append(("top", i, j))
                use_left = entry_left[i, j] < np.inf
        moves.reverse()
        return moves

    def _trace_path(self, moves: List[Tuple[str, int, int]], edges) -> Homeomorphism:
        rows, cols = self.rows, self.cols
        points = [(0.0, 0.0)]
        for kind, i, j in moves:
            t, u = points[-1]
            if kind == "diagonal":
                points.append((float(cols[j + 1]), float(rows[i + 1])))
            elif kind == "right":
                lo = max(edges["right"][0][i, j], edges["left"][0][i, j + 1])
                hi = min(edges["right"][1][i, j], edges["left"][1][i, j + 1])
                span = rows[i + 1] - rows[i]
                target = min(max(rows[i] + lo * span, u + WITNESS_STEP), rows[i] + hi * span)
                points.append((float(cols[j + 1]), float(max(target, u + WITNESS_STEP))))
            else:
                lo = max(edges["top"][0][i, j], edges["bottom"][0][i + 1, j])
                hi = min(edges["top"][1][i, j], edges["bottom"][1][i + 1, j])
                span = cols[j + 1] - cols[j]
                target = min(max(cols[j] + lo * span, t + WITNESS_STEP), cols[j] + hi * span)
                points.append((float(max(target, t + WITNESS_STEP)), float(rows[i + 1])))
        points.append((1.0, 1.0))
        return _strictly_increasing(points)


def _strictly_increasing(points: List[Tuple[float, float]]) -> Homeomorphism:
    """Homeomorphism through the points after separating them by WITNESS_STEP in both coordinates."""
    ts = np.array([p[0] for p in points])
    us = np.array([p[1] for p in points])
    if ts[-2] >= 1.0 and us[-2] >= 1.0:
        ts, us = ts[:-1], us[:-1]
    ts[-1] = us[-1] = 1.0
    for k in range(1, len(ts) - 1):
        ts[k] = max(ts[k], ts[k - 1] + WITNESS_STEP)
        us[k] = max(us[k], us[k - 1] + WITNESS_STEP)
    for k in range(len(ts) - 2, 0, -1):
        ts[k] = min(ts[k], ts[k + 1] - WITNESS_STEP)
        us[k] = min(us[k], us[k + 1] - WITNESS_STEP)
    return Homeomorphism(ts, us, tolerance=WITNESS_TOLERANCE)
