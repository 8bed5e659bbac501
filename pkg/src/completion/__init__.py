from .cauchy import CauchySequence, cauchy_limit, select_subsequence
from .pointwise import classify_time, pointwise_check

__all__ = ["CauchySequence", "cauchy_limit", "classify_time", "pointwise_check", "select_subsequence"]
