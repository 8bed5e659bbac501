"""
Module: turbofunction

Turbofunctions (F, σ) and the operations that build them from ordinary functions.

A turbofunction pairs a càdlàg function F on the parameter interval with a time
change σ from the parameter interval onto real time. Where σ is flat, F keeps
moving while real time stands still; that is an instanton.

Example:
    >>> from src.piecewise import CadlagFunction
    >>> from src.turbo import embed
    >>> x = embed(CadlagFunction.ramp())
    >>> x.sigma.is_identity
    True

Dependencies:
    - dataclasses
    - src.piecewise
"""

from dataclasses import dataclass
from typing import Tuple

from src.errors.core import PreconditionError
from src.piecewise import (
    CadlagFunction,
    Homeomorphism,
    TimeChange,
    compose_cadlag_homeo,
    compose_timechange_homeo,
)


class Turbofunction:
    """
    A pair (F, σ) of a càdlàg function and a time change on [0,1].

    Attributes:
        F (CadlagFunction): The function on the parameter interval.
        sigma (TimeChange): The time change onto real time.
    """

    __slots__ = ("F", "sigma")

    def __init__(self, F: CadlagFunction, sigma: TimeChange):
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "sigma", sigma)

    def __setattr__(self, name, value):
        raise AttributeError("Turbofunction is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Turbofunction):
            return NotImplemented
        return self.F == other.F and self.sigma == other.sigma

    def __hash__(self) -> int:
        return hash((self.F, self.sigma))

    @property
    def is_continuous(self) -> bool:
        """True iff F has no jumps, i.e. the pair belongs to the continuous subspace."""
        return self.F.is_continuous

    def __repr__(self) -> str:
        return f"Turbofunction(F={self.F!r}, sigma={self.sigma!r})"


@dataclass(frozen=True)
class Instanton:
    """
    A real time s at which the turbofunction runs through a whole trace of values.

    Attributes:
        s (float): The level of the flat piece of σ.
        t_interval (Tuple[float, float]): The maximal parameter interval [a, b] with σ = s.
        value_range (Tuple[float, float]): (min, max) of the trace.
        trace (CadlagFunction): F on [a, b] rescaled to [0,1].
    """
    s: float
    t_interval: Tuple[float, float]
    value_range: Tuple[float, float]
    trace: CadlagFunction

    @property
    def length(self) -> float:
        return self.t_interval[1] - self.t_interval[0]


def embed(f: CadlagFunction) -> Turbofunction:
    """The image f⁺ = (f, identity) of an ordinary function."""
    return Turbofunction(f, TimeChange.identity())


def reparametrize(x: Turbofunction, gamma: Homeomorphism) -> Turbofunction:
    """x∘γ = (F∘γ, σ∘γ), which is reparametrization-equivalent to x."""
    return Turbofunction(compose_cadlag_homeo(x.F, gamma), compose_timechange_homeo(x.sigma, gamma))


def sigma_delta(sigma: TimeChange, delta: float) -> TimeChange:
    """
    Strictly increasing regularization (1 - δ)σ + δ·t.

    Args:
        sigma (TimeChange): Time change to regularize.
        delta (float): Mixing weight in (0,1).

    Returns:
        TimeChange: A time change without flat pieces within δ of σ.

    Raises:
        PreconditionError: If δ is not in (0,1).
    """
    if not 0.0 < delta < 1.0:
        raise PreconditionError(f"delta must lie in (0,1), got {delta}")
    return TimeChange(sigma.times, (1.0 - delta) * sigma.values + delta * sigma.times)
