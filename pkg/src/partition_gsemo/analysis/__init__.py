"""Brute-force oracles and bound evaluators for desk-scale instances."""

from partition_gsemo.analysis.bounds import (
    BoundReport,
    expected_runtime_bound,
    theorem1_bound,
    theorem2_bound,
)
from partition_gsemo.analysis.brute_force import brute_force_opt
from partition_gsemo.analysis.definitions import (
    check_submodular,
    epsilon_j,
    gamma_ij,
    is_monotone,
)
from partition_gsemo.analysis.verification import verify_instance

__all__ = [
    "BoundReport",
    "brute_force_opt",
    "check_submodular",
    "epsilon_j",
    "expected_runtime_bound",
    "gamma_ij",
    "is_monotone",
    "theorem1_bound",
    "theorem2_bound",
    "verify_instance",
]
