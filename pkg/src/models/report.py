"""
Module: report

Pydantic models for the outputs of the completion and equivalence procedures.

Dependencies:
    - pydantic
    - src.turbo
"""

from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

from src.turbo import Turbofunction


class EquivalenceDecision(str, Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not-equivalent"
    UNKNOWN = "unknown"


class NodeDifference(BaseModel):
    """
    First node at which two canonical forms disagree.

    Attributes:
        component (Literal): "F" or "sigma".
        index (int): Node index within the component.
        x_node (Optional[Tuple[float, ...]]): The node of the first form; None past its last node.
        y_node (Optional[Tuple[float, ...]]): The node of the second form; None past its last node.
    """
    component: Literal["F", "sigma"]
    index: int
    x_node: Optional[Tuple[float, ...]] = None
    y_node: Optional[Tuple[float, ...]] = None


class EquivalenceReport(BaseModel):
    """
    Outcome of an equivalence test with its evidence.

    Attributes:
        decision (EquivalenceDecision): The three-valued answer.
        canonical_difference (float): Largest node difference of the canonical forms
            (infinite when the node counts differ).
        lower_bound (Optional[float]): Certified semi-distance lower bound, when computed.
        upper_bound (Optional[float]): Certified semi-distance upper bound, when computed.
        first_difference (Optional[NodeDifference]): Where the canonical forms first disagree.
    """
    decision: EquivalenceDecision
    canonical_difference: float
    lower_bound: Optional[float] = None
    upper_bound: Optional[float] = None
    first_difference: Optional[NodeDifference] = None


class LimitReport(BaseModel):
    """
    Limit of a Cauchy sequence with its certificate.

    Attributes:
        limit (Turbofunction): The constructed limit representative.
        residual (float): Certified bound of the semi-distance from the last used item to the limit.
        levels_used (int): Number of subsequence steps composed.
        continuous (bool): True when every item, and hence the limit, has continuous F.
        indices (List[int]): Indices of the selected subsequence.
        slack (float): Accumulated excess of witness objectives over their gap bounds.
    """
    limit: Turbofunction
    residual: float = Field(..., ge=0.0)
    levels_used: int = Field(..., ge=0)
    continuous: bool
    indices: List[int] = []
    slack: float = 0.0

    class Config:
        """Pydantic configuration for LimitReport"""
        from_attributes = True
        arbitrary_types_allowed = True


class PointClass(str, Enum):
    ENDPOINT_1 = "endpoint-1"
    GOOD = "good"
    EXCEPTIONAL = "exceptional"


class PointwiseEntry(BaseModel):
    """
    Pointwise convergence diagnostics at one real time s.

    Attributes:
        s (float): The time.
        classification (PointClass): endpoint-1, good or exceptional.
        deviations (List[float]): |visualize(item)(s) - visualize(limit)(s)| per item, for
            good points and s = 1; empty for exceptional points.
        tail_max (Optional[float]): Largest deviation over the last third of the sequence.
        decreasing (Optional[bool]): Whether the tail deviations do not increase.
        converged (Optional[bool]): Whether the last deviation is within tolerance.
    """
    s: float
    classification: PointClass
    deviations: List[float] = []
    tail_max: Optional[float] = None
    decreasing: Optional[bool] = None
    converged: Optional[bool] = None


class PointwiseReport(BaseModel):
    entries: List[PointwiseEntry]
    tolerance: float

    def entry(self, s: float) -> PointwiseEntry:
        for item in self.entries:
            if item.s == s:
                return item
        raise KeyError(s)


class CommandResult(BaseModel):
    """
    What a command prints and writes.

    Attributes:
        exit_code (int): Process exit status (0 success or equivalent, 1 not-equivalent
            or failed check, 5 unknown).
        lines (List[str]): Result lines for standard output, in order.
        artifacts (List[str]): Paths of files written.
    """
    exit_code: int = 0
    lines: List[str] = []
    artifacts: List[str] = []
