"""Solver lookup by the algorithm tag stored in RunRecord.algorithm."""

from typing import Optional

from partition_gsemo.algorithms.base import Solver
from partition_gsemo.algorithms.greedy import GREEDY, GreedySolver
from partition_gsemo.algorithms.gsemo import GSEMO, GsemoSolver
from partition_gsemo.algorithms.models import GsemoParams

ALGORITHMS = (GREEDY, GSEMO)


def make_solver(
    algorithm: str,
    params: Optional[GsemoParams] = None,
    trace_stride: Optional[int] = None,
) -> Solver:
    """
    Build the solver for an algorithm tag.

    Args:
        algorithm: One of ALGORITHMS
        params: GSEMO budget and seed (ignored by GREEDY)
        trace_stride: GSEMO trace stride (ignored by GREEDY)

    Raises:
        ValueError: unknown tag, or GSEMO without params
    """
    if algorithm == GREEDY:
        return GreedySolver()
    if algorithm == GSEMO:
        if params is None:
            raise ValueError("GSEMO needs GsemoParams")
        return GsemoSolver(params, trace_stride=trace_stride)
    raise ValueError(f"Unknown algorithm: {algorithm}")
