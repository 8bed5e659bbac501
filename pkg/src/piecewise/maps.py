"""
Module: maps

Continuous piecewise-linear maps of [0,1] onto itself.

TimeChange is non-decreasing and may be flat on intervals; Homeomorphism is
strictly increasing and therefore invertible. Both fix 0 and 1.

Example:
    >>> from src.piecewise.maps import Homeomorphism
    >>> gamma = Homeomorphism([0.0, 0.5, 1.0], [0.0, 0.25, 1.0])
    >>> gamma.inverse().evaluate(0.25)
    0.5

Dependencies:
    - numpy
"""

from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np

from src.errors.core import DomainError, InvariantViolation
from src.piecewise.cadlag import NODE_TOLERANCE, _readonly


def normalize_map_nodes(
    times: Sequence[float],
    values: Sequence[float],
    tolerance: float = NODE_TOLERANCE,
    strict: bool = False,
) -> Tuple[List[float], List[float]]:
    """
    Canonical node list of a continuous monotone map fixing 0 and 1.

    Args:
        times (Sequence[float]): Node times.
        values (Sequence[float]): Node values.
        tolerance (float): Merge tolerance.
        strict (bool): Require strictly increasing values.

    Returns:
        Tuple[List[float], List[float]]: Normalized times and values.

    Raises:
        InvariantViolation: If the nodes violate monotonicity or the endpoint conditions.
    """
    if len(times) != len(values):
        raise InvariantViolation("times and values must have the same length")
    if len(times) < 2:
        raise InvariantViolation("A map needs at least the nodes t=0 and t=1")
    ts: List[float] = []
    vs: List[float] = []
    for t, v in zip(times, values):
        t, v = float(t), float(v)
        if not (np.isfinite(t) and np.isfinite(v)):
            raise InvariantViolation(f"Node ({t}, {v}) has a non-finite entry")
        if ts and t < ts[-1] - tolerance:
            raise InvariantViolation(f"Node times must be increasing, got {t} after {ts[-1]}")
        if ts and t - ts[-1] <= tolerance:
            vs[-1] = v
            continue
        ts.append(t)
        vs.append(v)

    if len(ts) < 2 or abs(ts[0]) > tolerance or abs(ts[-1] - 1.0) > tolerance:
        raise InvariantViolation("Map nodes must start at t=0 and end at t=1")
    if abs(vs[0]) > tolerance or abs(vs[-1] - 1.0) > tolerance:
        raise InvariantViolation(f"Map must fix 0 and 1, got values {vs[0]} and {vs[-1]}")
    ts[0], ts[-1], vs[0], vs[-1] = 0.0, 1.0, 0.0, 1.0

    for i in range(1, len(vs)):
        gap = vs[i] - vs[i - 1]
        if gap < -tolerance:
            raise InvariantViolation(f"Map values must be non-decreasing, got {vs[i]} after {vs[i - 1]}")
        if strict and gap <= 0.0:
            raise InvariantViolation(f"Homeomorphism values must increase strictly at t={ts[i]}")
        if not strict and gap <= tolerance:
            vs[i] = vs[i - 1]

    kept = [0]
    for i in range(1, len(ts)):
        while len(kept) >= 2:
            mid, prev = kept[-1], kept[-2]
            expected = vs[prev] + (vs[i] - vs[prev]) * (ts[mid] - ts[prev]) / (ts[i] - ts[prev])
            if abs(expected - vs[mid]) > tolerance:
                break
            kept.pop()
        kept.append(i)
    return [ts[i] for i in kept], [vs[i] for i in kept]


class _MonotoneMap:
    _strict = False

    def __init__(self, times: Sequence[float], values: Sequence[float], tolerance: float = NODE_TOLERANCE):
        ts, vs = normalize_map_nodes(times, values, tolerance, strict=self._strict)
        self.times = _readonly(ts)
        self.values = _readonly(vs)

    @classmethod
    def identity(cls):
        return cls([0.0, 1.0], [0.0, 1.0])

    @classmethod
    def from_nodes(cls, nodes: Sequence[Sequence[float]]):
        return cls([n[0] for n in nodes], [n[1] for n in nodes])

    @property
    def nodes(self) -> List[Tuple[float, float]]:
        return [(float(t), float(v)) for t, v in zip(self.times, self.values)]

    @property
    def size(self) -> int:
        return len(self.times)

    @cached_property
    def is_identity(self) -> bool:
        return self.size == 2

    def evaluate(self, t: float) -> float:
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"t={t} lies outside [0,1]")
        return float(np.interp(t, self.times, self.values))

    def values_at(self, ts: np.ndarray) -> np.ndarray:
        return np.interp(np.asarray(ts, dtype=float), self.times, self.values)

    def deviation_from_identity(self) -> float:
        """sup |map(t) - t|, attained at a node."""
        return float(np.max(np.abs(self.values - self.times)))

    def is_close(self, other: "_MonotoneMap", tolerance: float = NODE_TOLERANCE) -> bool:
        grid = np.union1d(self.times, other.times)
        return bool(np.max(np.abs(self.values_at(grid) - other.values_at(grid))) <= tolerance)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return np.array_equal(self.times, other.times) and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.times.tobytes(), self.values.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.nodes})"


class TimeChange(_MonotoneMap):
    """
    Continuous non-decreasing surjection of [0,1], possibly with flat pieces.

    A flat piece [a,b] of a time change is where an instanton lives: the time
    change pauses while the companion function keeps moving.
    """

    @cached_property
    def flat_intervals(self) -> List[Tuple[float, float, float]]:
        """Maximal flat pieces as (a, b, level)."""
        flats = []
        for i in range(self.size - 1):
            if self.values[i + 1] == self.values[i]:
                flats.append((float(self.times[i]), float(self.times[i + 1]), float(self.values[i])))
        return flats

    @cached_property
    def is_homeomorphism(self) -> bool:
        return not self.flat_intervals

    def to_homeomorphism(self) -> "Homeomorphism":
        """
        Raises:
            InvariantViolation: If the time change has a flat piece.
        """
        return Homeomorphism(self.times, self.values)

    def preimage_max(self, levels: np.ndarray) -> np.ndarray:
        """max{t : sigma(t) <= s}, the right-continuous inverse, per level."""
        levels = np.asarray(levels, dtype=float)
        idx = np.searchsorted(self.values, levels, side="right") - 1
        idx = np.clip(idx, 0, self.size - 1)
        nxt = np.minimum(idx + 1, self.size - 1)
        rise = self.values[nxt] - self.values[idx]
        frac = np.where(rise > 0.0, (levels - self.values[idx]) / np.where(rise > 0.0, rise, 1.0), 0.0)
        return np.clip(self.times[idx] + frac * (self.times[nxt] - self.times[idx]), 0.0, 1.0)

    def preimage_min(self, levels: np.ndarray) -> np.ndarray:
        """min{t : sigma(t) >= s}, the left-continuous inverse, per level."""
        levels = np.asarray(levels, dtype=float)
        idx = np.searchsorted(self.values, levels, side="left")
        idx = np.clip(idx, 0, self.size - 1)
        prev = np.maximum(idx - 1, 0)
        rise = self.values[idx] - self.values[prev]
        frac = np.where(rise > 0.0, (self.values[idx] - levels) / np.where(rise > 0.0, rise, 1.0), 0.0)
        return np.clip(self.times[idx] - frac * (self.times[idx] - self.times[prev]), 0.0, 1.0)


class Homeomorphism(_MonotoneMap):
    """Strictly increasing continuous bijection of [0,1] fixing the endpoints."""

    _strict = True

    def inverse(self) -> "Homeomorphism":
        return Homeomorphism(self.values, self.times)

    def inverse_at(self, ss: np.ndarray) -> np.ndarray:
        return np.interp(np.asarray(ss, dtype=float), self.values, self.times)

    def as_time_change(self) -> TimeChange:
        return TimeChange(self.times, self.values)
