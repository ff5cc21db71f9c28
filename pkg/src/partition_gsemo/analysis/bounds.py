"""
Approximation guarantees and run-time bound for GSEMO under partition matroids.

- theorem1_bound: submodular f, (1 - e^{-dbar/d}) [OPT - (dbar - 1) eps_{d+dbar}]
- theorem2_bound: monotone f, (1 - e^{-gamma dbar/d}) OPT with gamma = gamma_{dbar,d}
- expected_runtime_bound: e * dbar * n * (d + 1) iterations to reach either guarantee
"""

import math
from typing import List, Optional

from pydantic import BaseModel, Field


def _check_thresholds(d: int, dbar: int):
    if not 1 <= dbar <= d:
        raise ValueError(f"Bounds need 1 <= dbar <= d, got dbar = {dbar}, d = {d}")


def theorem1_bound(opt: float, eps: float, d: int, dbar: int) -> float:
    """
    Guarantee for submodular objectives, clamped below at 0.

    Raises:
        ValueError: if opt < 0, eps < 0 or not 1 <= dbar <= d
    """
    _check_thresholds(d, dbar)
    if opt < 0 or eps < 0:
        raise ValueError(f"theorem1_bound needs opt >= 0 and eps >= 0, got {opt}, {eps}")
    bound = (1.0 - math.exp(-dbar / d)) * (opt - (dbar - 1) * eps)
    return max(0.0, bound)


def theorem2_bound(opt: float, gamma: float, d: int, dbar: int) -> float:
    """
    Guarantee for monotone objectives.

    gamma above 1 (including inf) is capped at 1.

    Raises:
        ValueError: if gamma < 0 or not 1 <= dbar <= d
    """
    _check_thresholds(d, dbar)
    if gamma < 0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    gamma = min(gamma, 1.0)
    return (1.0 - math.exp(-gamma * dbar / d)) * opt


def expected_runtime_bound(n: int, d: int, dbar: int) -> float:
    """Expected GSEMO iterations e * dbar * n * (d + 1) for either guarantee."""
    _check_thresholds(d, dbar)
    return math.e * dbar * n * (d + 1)


class BoundReport(BaseModel):
    """Brute-force quantities, both guarantees and the values the solvers reached."""

    instance_id: Optional[str] = None
    objective: str
    n: int
    k: int
    d: int
    dbar: int
    opt_value: float
    epsilon_term: float = Field(description="eps_{d + dbar}")
    gamma_term: Optional[float] = Field(
        default=None, description="gamma_{dbar,d} as computed (monotone objectives only)"
    )
    monotone: bool
    submodular: Optional[bool] = None
    theorem1_bound: float
    theorem2_bound: Optional[float] = None
    expected_runtime_bound: float
    gsemo_iterations: int
    gsemo_values: List[float]
    achieved_value: float = Field(description="Smallest GSEMO value over the repeats")
    greedy_value: float
    gsemo_meets_theorem1: bool
    gsemo_meets_theorem2: Optional[bool] = None
    greedy_meets_theorem1: bool
