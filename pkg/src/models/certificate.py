"""
Module: certificate

Pydantic models for distance queries and their certified answers.

Example:
    >>> from src.models.certificate import ThresholdQuery
    >>> ThresholdQuery(eps_value=0.0, eps_time=0.1)

Dependencies:
    - pydantic
    - src.piecewise
"""

import math
from typing import List, Optional

from pydantic import BaseModel, Field, validator

from src.piecewise import Homeomorphism


class ThresholdQuery(BaseModel):
    """
    Budgets of a decision query.

    Attributes:
        eps_value (float): Budget for the sup of the function mismatch.
        eps_time (float): Budget for the sup of the time mismatch.
    """
    eps_value: float = Field(..., ge=0.0)
    eps_time: float = Field(..., ge=0.0)

    @validator('eps_value', 'eps_time')
    def validate_finite(cls, v):
        """
        Validates that a budget is finite.

        Raises:
            ValueError: If the budget is infinite or NaN
        """
        if not math.isfinite(v):
            raise ValueError("Budgets must be finite")
        return v

    class Config:
        """Pydantic configuration for ThresholdQuery"""
        from_attributes = True
        validate_assignment = True
        frozen = True


class BudgetProbe(BaseModel):
    """
    Outcome of one value budget tried during refinement.

    Attributes:
        eps_value (float): The value budget.
        infeasible_time (float): A time budget certified infeasible (0 when none is).
        feasible_time (Optional[float]): Smallest time budget found feasible, if any.
        objective (Optional[float]): Recomputed objective of the witness found, if any.
        exhausted (bool): Infeasible even with the largest time budget, 1; no warp keeps
            the value mismatch within eps_value.
    """
    eps_value: float
    infeasible_time: float
    feasible_time: Optional[float] = None
    objective: Optional[float] = None
    exhausted: bool = False


class RefinementLevel(BaseModel):
    """
    Bounds after one refinement level.

    Attributes:
        level (int): 0-based level index.
        grid (float): Largest gap between the sample times the lower bound used on the level.
        lower (float): Lower bound after the level.
        upper (float): Upper bound after the level.
        probes (int): Value budgets probed so far.
    """
    level: int
    grid: float
    lower: float
    upper: float
    probes: int = 0


class DistanceCertificate(BaseModel):
    """
    Certified bounds of an infimum-defined distance.

    Attributes:
        lower (float): Certified lower bound.
        upper (float): Certified upper bound, at least the recomputed witness objective.
        witness (Homeomorphism): Time warp achieving an objective <= upper.
        grid_resolution (float): Finest sampling resolution the lower bound actually used.
        exact (bool): True when upper - lower <= 1e-9 by construction.
        history (List[RefinementLevel]): Bounds per refinement level.
    """
    lower: float = Field(..., ge=0.0)
    upper: float = Field(..., ge=0.0)
    witness: Homeomorphism
    grid_resolution: float = Field(..., gt=0.0)
    exact: bool = False
    history: List[RefinementLevel] = []

    @validator('upper')
    def validate_ordered(cls, v, values):
        """
        Validates that the upper bound does not fall below the lower bound.

        Raises:
            ValueError: If upper < lower
        """
        if 'lower' in values and v < values['lower']:
            raise ValueError(f"Upper bound {v} is below lower bound {values['lower']}")
        return v

    @property
    def gap(self) -> float:
        return self.upper - self.lower

    @property
    def value(self) -> float:
        """Midpoint of the bracket; the distance itself when exact."""
        return self.upper if self.exact else 0.5 * (self.lower + self.upper)

    def brackets(self, value: float, tolerance: float = 0.0) -> bool:
        return self.lower - tolerance <= value <= self.upper + tolerance

    class Config:
        """Pydantic configuration for DistanceCertificate"""
        from_attributes = True
        arbitrary_types_allowed = True
