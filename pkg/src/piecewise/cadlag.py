"""
Module: cadlag

Exact representation of piecewise-linear càdlàg functions on [0,1].

A CadlagFunction is a finite list of nodes (t, left_value, right_value). Between
two consecutive nodes the function is affine, running from the right value of the
earlier node to the left value of the later one. The value at a node is its right
value; a jump is a node whose two values differ. Step functions are the special
case in which every segment is flat.

Example:
    >>> from src.piecewise.cadlag import CadlagFunction
    >>> f = CadlagFunction.step([0.5], [0.0, 1.0])
    >>> f.evaluate(0.5), f.left_limit(0.5)
    (1.0, 0.0)

Dependencies:
    - numpy
    - src.errors.core
"""

from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.errors.core import DomainError, InvariantViolation

NODE_TOLERANCE = 1e-9

Node = Tuple[float, float, float]


def _readonly(values: Sequence[float]) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


def normalize_cadlag_nodes(
    nodes: Iterable[Sequence[float]], tolerance: float = NODE_TOLERANCE
) -> Tuple[List[float], List[float], List[float]]:
    """
    Brings a node list into canonical form.

    Nodes closer than `tolerance` in time are merged (left value of the first, right
    value of the last), jumps smaller than `tolerance` are removed, the value at 0 is
    made one-sided and interior nodes that neither jump nor bend are dropped.

    Args:
        nodes (Iterable[Sequence[float]]): Triples (t, left_value, right_value).
        tolerance (float): Merge tolerance for times and values.

    Returns:
        Tuple[List[float], List[float], List[float]]: Times, left values, right values.

    Raises:
        InvariantViolation: If the nodes do not describe a function on [0,1].
    """
    raw = [tuple(float(x) for x in node) for node in nodes]
    if len(raw) < 2:
        raise InvariantViolation("A càdlàg function needs at least the nodes t=0 and t=1")
    for node in raw:
        if len(node) != 3:
            raise InvariantViolation(f"Node {node} must be a (t, left_value, right_value) triple")
        if not all(np.isfinite(node)):
            raise InvariantViolation(f"Node {node} has a non-finite entry")

    times: List[float] = []
    lefts: List[float] = []
    rights: List[float] = []
    for t, left, right in raw:
        if times and t < times[-1] - tolerance:
            raise InvariantViolation(f"Node times must be increasing, got {t} after {times[-1]}")
        if times and t - times[-1] <= tolerance:
            rights[-1] = right
            continue
        times.append(t)
        lefts.append(left)
        rights.append(right)

    if abs(times[0]) > tolerance:
        raise InvariantViolation(f"First node must be at t=0, got {times[0]}")
    if abs(times[-1] - 1.0) > tolerance or len(times) < 2:
        raise InvariantViolation(f"Last node must be at t=1, got {times[-1]}")
    times[0] = 0.0
    times[-1] = 1.0
    lefts[0] = rights[0]

    for i in range(1, len(times)):
        if abs(lefts[i] - rights[i]) <= tolerance:
            lefts[i] = rights[i]

    kept = [0]
    for i in range(1, len(times)):
        while len(kept) >= 2:
            mid, prev = kept[-1], kept[-2]
            if lefts[mid] != rights[mid]:
                break
            span = times[i] - times[prev]
            expected = rights[prev] + (lefts[i] - rights[prev]) * (times[mid] - times[prev]) / span
            if abs(expected - rights[mid]) > tolerance:
                break
            kept.pop()
        kept.append(i)

    return ([times[i] for i in kept], [lefts[i] for i in kept], [rights[i] for i in kept])


class CadlagFunction:
    """
    Immutable piecewise-linear càdlàg function on [0,1].

    Attributes:
        times (np.ndarray): Node times, strictly increasing from 0 to 1.
        lefts (np.ndarray): Left limits at the nodes (equal to the right value at t=0).
        rights (np.ndarray): Values at the nodes.
    """

    def __init__(self, nodes: Iterable[Sequence[float]], tolerance: float = NODE_TOLERANCE):
        times, lefts, rights = normalize_cadlag_nodes(nodes, tolerance)
        self.times = _readonly(times)
        self.lefts = _readonly(lefts)
        self.rights = _readonly(rights)

    @classmethod
    def constant(cls, value: float) -> "CadlagFunction":
        return cls([(0.0, value, value), (1.0, value, value)])

    @classmethod
    def ramp(cls) -> "CadlagFunction":
        """The identity f(t) = t."""
        return cls([(0.0, 0.0, 0.0), (1.0, 1.0, 1.0)])

    @classmethod
    def from_points(cls, times: Sequence[float], values: Sequence[float]) -> "CadlagFunction":
        """Continuous piecewise-linear function through the given points."""
        if len(times) != len(values):
            raise InvariantViolation("times and values must have the same length")
        return cls([(t, v, v) for t, v in zip(times, values)])

    @classmethod
    def step(cls, jump_times: Sequence[float], values: Sequence[float]) -> "CadlagFunction":
        """
        Step function taking values[k] on [jump_times[k-1], jump_times[k]).

        Args:
            jump_times (Sequence[float]): Interior jump times, increasing, inside (0,1).
            values (Sequence[float]): One value per piece, len(jump_times) + 1 of them.
        """
        if len(values) != len(jump_times) + 1:
            raise InvariantViolation("A step function needs one more value than jump times")
        nodes = [(0.0, values[0], values[0])]
        for k, t in enumerate(jump_times):
            if not 0.0 < t < 1.0:
                raise InvariantViolation(f"Jump time {t} must lie in (0,1)")
            nodes.append((t, values[k], values[k + 1]))
        nodes.append((1.0, values[-1], values[-1]))
        return cls(nodes)

    @property
    def nodes(self) -> List[Node]:
        return [(float(t), float(l), float(r)) for t, l, r in zip(self.times, self.lefts, self.rights)]

    @property
    def size(self) -> int:
        return len(self.times)

    @cached_property
    def is_continuous(self) -> bool:
        return bool(np.all(self.lefts == self.rights))

    @cached_property
    def is_step(self) -> bool:
        return bool(np.all(self.rights[:-1] == self.lefts[1:]))

    @cached_property
    def jump_times(self) -> np.ndarray:
        return self.times[self.lefts != self.rights]

    def evaluate(self, t: float) -> float:
        """
        Right-continuous value f(t).

        Raises:
            DomainError: If t lies outside [0,1].
        """
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"t={t} lies outside [0,1]")
        return float(self.values_at(np.array([t]))[0])

    def left_limit(self, t: float) -> float:
        """
        Left limit f(t-).

        Raises:
            DomainError: If t lies outside (0,1].
        """
        if not 0.0 < t <= 1.0:
            raise DomainError(f"Left limit needs 0 < t <= 1, got t={t}")
        return float(self.left_limits_at(np.array([t]))[0])

    def values_at(self, ts: np.ndarray) -> np.ndarray:
        """Vectorized evaluation; `ts` is assumed to lie in [0,1]."""
        ts = np.asarray(ts, dtype=float)
        last = len(self.times) - 2
        idx = np.clip(np.searchsorted(self.times, ts, side="right") - 1, 0, last)
        frac = (ts - self.times[idx]) / (self.times[idx + 1] - self.times[idx])
        values = self.rights[idx] + (self.lefts[idx + 1] - self.rights[idx]) * frac
        return np.where(ts >= 1.0, self.rights[-1], values)

    def left_limits_at(self, ts: np.ndarray) -> np.ndarray:
        """Vectorized left limits; the entry for t=0 is the value at 0."""
        ts = np.asarray(ts, dtype=float)
        last = len(self.times) - 2
        idx = np.clip(np.searchsorted(self.times, ts, side="left") - 1, 0, last)
        frac = (ts - self.times[idx]) / (self.times[idx + 1] - self.times[idx])
        return self.rights[idx] + (self.lefts[idx + 1] - self.rights[idx]) * frac

    @cached_property
    def _variation_tables(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        segments = np.abs(self.lefts[1:] - self.rights[:-1])
        jumps = np.abs(self.rights - self.lefts)
        continuous = np.concatenate(([0.0], np.cumsum(segments)))
        return segments, continuous, np.cumsum(jumps)

    def total_variation(self, t: float, include_jumps: bool = True) -> float:
        """
        Total variation of f on [0,t], jumps at times <= t included.

        Args:
            t (float): Right end of the interval.
            include_jumps (bool): When False only the continuous part is measured.

        Raises:
            DomainError: If t lies outside [0,1].
        """
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"t={t} lies outside [0,1]")
        return float(self.variation_at(np.array([t]), include_jumps)[0])

    def variation_at(self, ts: np.ndarray, include_jumps: bool = True) -> np.ndarray:
        """Vectorized total variation on [0,t]."""
        segments, continuous, jumps = self._variation_tables
        ts = np.asarray(ts, dtype=float)
        idx = np.searchsorted(self.times, ts, side="right") - 1
        seg = np.minimum(idx, len(segments) - 1)
        frac = np.where(
            idx < len(segments),
            (ts - self.times[seg]) / (self.times[seg + 1] - self.times[seg]),
            0.0,
        )
        variation = continuous[idx] + segments[seg] * frac
        if include_jumps:
            variation = variation + jumps[idx]
        return variation

    def value_range(self) -> Tuple[float, float]:
        """(min, max) of f over [0,1], including one-sided values at jumps."""
        values = np.concatenate((self.lefts, self.rights))
        return float(values.min()), float(values.max())

    def is_close(self, other: "CadlagFunction", tolerance: float = NODE_TOLERANCE) -> bool:
        """Node-wise comparison of two normalized functions."""
        if self.size != other.size:
            return False
        return bool(
            np.all(np.abs(self.times - other.times) <= tolerance)
            and np.all(np.abs(self.lefts - other.lefts) <= tolerance)
            and np.all(np.abs(self.rights - other.rights) <= tolerance)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CadlagFunction):
            return NotImplemented
        return (
            np.array_equal(self.times, other.times)
            and np.array_equal(self.lefts, other.lefts)
            and np.array_equal(self.rights, other.rights)
        )

    def __hash__(self) -> int:
        return hash((self.times.tobytes(), self.lefts.tobytes(), self.rights.tobytes()))

    def __repr__(self) -> str:
        return f"CadlagFunction({self.nodes})"
