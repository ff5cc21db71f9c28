"""
Data models for solver parameters and run results.

- GsemoParams: iteration budget and seed of one GSEMO run
- RunRecord: outcome of one algorithm execution, persisted one per line
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from partition_gsemo.algorithms.seeding import MAX_SEED


class GsemoParams(BaseModel):
    """Budget and randomness of one GSEMO run."""

    iterations: int = Field(ge=0, description="Number of iterations T")
    seed: int = Field(ge=0, le=MAX_SEED, description="64-bit unsigned seed")


class RunRecord(BaseModel):
    """
    One algorithm execution.

    The trace holds (iteration, best-so-far value) samples. For GREEDY the
    iteration coordinate is the number of oracle calls spent so far.
    """

    algorithm: str
    instance_id: Optional[str] = None
    repeat: int = 0
    seed: Optional[int] = None
    iterations: Optional[int] = None
    oracle_calls: int = Field(ge=0)
    best_value: float
    best_solution: List[int] = Field(default_factory=list)
    trace: Optional[List[Tuple[int, float]]] = None

    @field_validator("trace")
    @classmethod
    def _trace_non_decreasing(cls, trace):
        if trace is None:
            return trace
        for (_, earlier), (_, later) in zip(trace, trace[1:]):
            if later < earlier:
                raise ValueError("Trace values must be non-decreasing")
        return trace

    @property
    def key(self) -> Tuple[str, str, int]:
        """Store key (instance_id, algorithm, repeat)."""
        return (self.instance_id or "", self.algorithm, self.repeat)
