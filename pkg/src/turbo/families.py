"""
Module: families

The worked families: the triangular bumps g_θ, the time changes σ_θ that turn
g_4 into g_θ, the limit turbofunction they converge to, and the constant pair
whose semi-distance vanishes although no homeomorphism relates them.

Example:
    >>> from src.turbo.families import g_theta_family
    >>> g_theta_family(8).evaluate(0.5)
    1.0

Dependencies:
    - src.piecewise
"""

from typing import Tuple

from src.errors.core import PreconditionError
from src.piecewise import CadlagFunction, TimeChange
from src.turbo.turbofunction import Turbofunction, embed


def _check_theta(theta: float) -> None:
    if not theta > 2.0:
        raise PreconditionError(f"theta must be greater than 2, got {theta}")


def g_theta_family(theta: float) -> CadlagFunction:
    """
    The triangular bump g_θ(s) = (1 - |θ(s - 1/2)|)_+.

    Raises:
        PreconditionError: If θ <= 2.
    """
    _check_theta(theta)
    half_width = 1.0 / theta
    return CadlagFunction.from_points(
        [0.0, 0.5 - half_width, 0.5, 0.5 + half_width, 1.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
    )


def paper_sigma_theta(theta: float) -> TimeChange:
    """
    Time change with nodes (0,0), (1/4, 1/2 - 1/θ), (3/4, 1/2 + 1/θ), (1,1).

    It satisfies g_4∘σ_θ⁻¹ = g_θ.

    Raises:
        PreconditionError: If θ <= 2.
    """
    _check_theta(theta)
    return TimeChange([0.0, 0.25, 0.75, 1.0], [0.0, 0.5 - 1.0 / theta, 0.5 + 1.0 / theta, 1.0])


def flat_sigma() -> TimeChange:
    """Time change flat at level 1/2 on [1/4, 3/4]."""
    return TimeChange([0.0, 0.25, 0.75, 1.0], [0.0, 0.5, 0.5, 1.0])


def paper_limit() -> Turbofunction:
    """(g_4, flat_sigma()), the limit of g_θ as θ grows; its visualization is zero."""
    return Turbofunction(g_theta_family(4.0), flat_sigma())


def unit_constant_pair() -> Tuple[Turbofunction, Turbofunction]:
    """The constant 1 with the identity time change and with flat_sigma()."""
    one = CadlagFunction.constant(1.0)
    return embed(one), Turbofunction(one, flat_sigma())
