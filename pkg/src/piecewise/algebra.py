"""
Module: algebra

Composition, inversion and distances between piecewise-linear objects.

Compositions are exact: the node set of f∘γ is the union of γ's nodes and the
preimages under γ of f's nodes, and f is always evaluated at its own node times
so that jumps land on the correct side.

Example:
    >>> from src.piecewise import CadlagFunction, Homeomorphism, compose_cadlag_homeo
    >>> f = CadlagFunction.step([0.5], [0.0, 1.0])
    >>> gamma = Homeomorphism([0.0, 0.25, 1.0], [0.0, 0.5, 1.0])
    >>> compose_cadlag_homeo(f, gamma).jump_times.tolist()
    [0.25]

Dependencies:
    - numpy
"""

from typing import Tuple, Union

import numpy as np

from src.errors.core import DomainError, InvariantViolation
from src.piecewise.cadlag import CadlagFunction
from src.piecewise.maps import Homeomorphism, TimeChange, _MonotoneMap


def _pullback_grid(outer_times: np.ndarray, inner: Homeomorphism) -> Tuple[np.ndarray, np.ndarray]:
    """
    Node times tau of outer∘inner together with u = inner(tau).

    The u entries that correspond to nodes of the outer object are its exact node
    times, not a round trip through inner.
    """
    u = np.union1d(inner.values, outer_times)
    tau = inner.inverse_at(u)
    exact = np.searchsorted(inner.values, u)
    hit = (exact < inner.size) & (inner.values[np.minimum(exact, inner.size - 1)] == u)
    tau = np.where(hit, inner.times[np.minimum(exact, inner.size - 1)], tau)
    return tau, u


def compose_cadlag_homeo(f: CadlagFunction, gamma: Homeomorphism) -> CadlagFunction:
    """
    f∘γ as a new CadlagFunction.

    Args:
        f (CadlagFunction): Outer function.
        gamma (Homeomorphism): Inner reparametrization.

    Returns:
        CadlagFunction: The composition, normalized.
    """
    tau, u = _pullback_grid(f.times, gamma)
    rights = f.values_at(u)
    lefts = f.left_limits_at(u)
    return CadlagFunction(zip(tau, lefts, rights))


def compose_timechange_homeo(sigma: TimeChange, gamma: Homeomorphism) -> TimeChange:
    """σ∘γ, again a time change."""
    tau, u = _pullback_grid(sigma.times, gamma)
    return TimeChange(tau, sigma.values_at(u))


def compose_homeo(outer: Homeomorphism, inner: Homeomorphism) -> Homeomorphism:
    """outer∘inner."""
    tau, u = _pullback_grid(outer.times, inner)
    return Homeomorphism(tau, outer.values_at(u))


def invert_homeo(gamma: Homeomorphism) -> Homeomorphism:
    return gamma.inverse()


def evaluate(f: Union[CadlagFunction, _MonotoneMap], t: float) -> float:
    return f.evaluate(t)


def left_limit(f: CadlagFunction, t: float) -> float:
    return f.left_limit(t)


def total_variation(f: CadlagFunction, t: float) -> float:
    return f.total_variation(t)


def sup_distance(f: CadlagFunction, g: CadlagFunction) -> float:
    """
    sup over [0,1] of |f(t) - g(t)|.

    On every segment of the merged node grid the difference is affine, so the
    supremum is attained at a one-sided limit of some grid point.
    """
    grid = np.union1d(f.times, g.times)
    right = np.abs(f.values_at(grid) - g.values_at(grid))
    left = np.abs(f.left_limits_at(grid[1:]) - g.left_limits_at(grid[1:]))
    return float(max(right.max(), left.max() if left.size else 0.0))


def map_sup_distance(a: _MonotoneMap, b: _MonotoneMap) -> float:
    """sup |a(t) - b(t)| for continuous maps."""
    grid = np.union1d(a.times, b.times)
    return float(np.max(np.abs(a.values_at(grid) - b.values_at(grid))))


def restrict(f: CadlagFunction, a: float, b: float) -> CadlagFunction:
    """
    f on [a,b], rescaled to [0,1].

    The result starts at f(a) and ends at the left limit f(b-), the way the
    trace of an instanton is read off.

    Raises:
        DomainError: Unless 0 <= a < b <= 1.
    """
    if not 0.0 <= a < b <= 1.0:
        raise DomainError(f"Cannot restrict to [{a}, {b}]")
    inner = f.times[(f.times > a) & (f.times < b)]
    grid = np.concatenate(([a], inner, [b]))
    rights = f.values_at(grid)
    lefts = f.left_limits_at(grid)
    lefts[0] = rights[0]
    rights[-1] = lefts[-1]
    span = b - a
    return CadlagFunction(zip((grid - a) / span, lefts, rights))


def time_change_from_cadlag(f: CadlagFunction) -> TimeChange:
    """
    Reads a continuous non-decreasing CadlagFunction as a TimeChange.

    Raises:
        InvariantViolation: If f jumps.
    """
    if not f.is_continuous:
        raise InvariantViolation("A time change must be continuous")
    return TimeChange(f.times, f.rights)


def composed_sup_distance(
    f: CadlagFunction, gamma: _MonotoneMap, g: CadlagFunction, tolerance: float = 1e-15
) -> float:
    """
    sup over t of |f(γ(t)) - g(t)| without building f∘γ.

    The candidate grid holds the nodes of γ, the γ-preimages of the nodes of f and
    the nodes of g. Grid points closer than `tolerance` are identified, keeping the
    exact node time of g and the exact argument of f, so jumps that γ aligns are
    compared on the same side. No node merging at the construction tolerance
    takes place, so witnesses with very close nodes are measured faithfully.

    Args:
        f (CadlagFunction): Function composed with γ.
        gamma (_MonotoneMap): Strictly increasing continuous map of [0,1].
        g (CadlagFunction): Function compared against.
        tolerance (float): Identification tolerance for grid points.

    Returns:
        float: The supremum, one-sided limits included.
    """
    f_tau = np.interp(f.times, gamma.values, gamma.times)
    g_u = gamma.values_at(g.times)
    tau = np.concatenate((gamma.times, f_tau, g.times))
    u = np.concatenate((gamma.values, f.times, g_u))
    exact_u = np.concatenate((np.ones(gamma.size, bool), np.ones(f.size, bool), np.zeros(g.size, bool)))
    exact_tau = np.concatenate((np.ones(gamma.size, bool), np.zeros(f.size, bool), np.ones(g.size, bool)))
    order = np.lexsort((~exact_u, tau))
    tau, u, exact_u, exact_tau = tau[order], u[order], exact_u[order], exact_tau[order]

    merged_tau: list = []
    merged_u: list = []
    group_start = 0
    for k in range(1, len(tau) + 1):
        if k < len(tau) and tau[k] - tau[group_start] <= tolerance:
            continue
        members = slice(group_start, k)
        group_u = u[members][exact_u[members]]
        group_tau = tau[members][exact_tau[members]]
        merged_u.append(group_u[0] if group_u.size else u[group_start])
        merged_tau.append(group_tau[0] if group_tau.size else tau[group_start])
        group_start = k

    tau = np.clip(np.array(merged_tau), 0.0, 1.0)
    u = np.clip(np.array(merged_u), 0.0, 1.0)
    right = np.abs(f.values_at(u) - g.values_at(tau))
    left = np.abs(f.left_limits_at(u[1:]) - g.left_limits_at(tau[1:]))
    return float(max(right.max(), left.max() if left.size else 0.0))


def composed_map_distance(sigma: _MonotoneMap, gamma: _MonotoneMap, other: _MonotoneMap) -> float:
    """sup over t of |σ(γ(t)) - other(t)| for continuous maps."""
    grid = np.union1d(np.union1d(gamma.times, other.times), np.interp(sigma.times, gamma.values, gamma.times))
    return float(np.max(np.abs(sigma.values_at(gamma.values_at(grid)) - other.values_at(grid))))
