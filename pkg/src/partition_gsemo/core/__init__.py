"""Ground-set solutions, partition matroid feasibility and the bi-objective view."""

from partition_gsemo.core.bi_objective import dominance, evaluate_bi, is_feasible
from partition_gsemo.core.models import (
    NEGATIVE_INFINITY,
    BiValue,
    Dominance,
    Extended,
    OracleCounter,
    PartitionMatroid,
    Solution,
)

__all__ = [
    "NEGATIVE_INFINITY",
    "BiValue",
    "Dominance",
    "Extended",
    "OracleCounter",
    "PartitionMatroid",
    "Solution",
    "dominance",
    "evaluate_bi",
    "is_feasible",
]
