"""
Constraint families of the max-cut experiments.

- Cardinality: one block of all n elements, d1 = fraction * n rounded half-up
- Partition: k equal blocks, elements randomly assigned, every d_i = ceil(n / 2k)
"""

import math
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from partition_gsemo.core.models import PartitionMatroid
from partition_gsemo.errors import InstanceValidationError


def make_cardinality_constraint(n: int, fraction: float) -> PartitionMatroid:
    """
    Single-block constraint with d1 = round(fraction * n), half-up.

    Raises:
        InstanceValidationError: if fraction is outside (0, 1] or d1 rounds to 0
    """
    if not 0 < fraction <= 1:
        raise InstanceValidationError(f"Cardinality fraction must lie in (0, 1], got {fraction}")
    d1 = int(
        (Decimal(repr(float(fraction))) * n).to_integral_value(rounding=ROUND_HALF_UP)
    )
    if d1 < 1:
        raise InstanceValidationError(
            f"Cardinality threshold rounds to 0 for n = {n}, fraction = {fraction}"
        )
    return PartitionMatroid.cardinality(n, d1)


def make_partition_constraint(n: int, k: int, rng: np.random.Generator) -> PartitionMatroid:
    """
    Balanced random partition into k blocks of n / k elements each.

    Raises:
        InstanceValidationError: if k < 1 or k does not divide n
    """
    if k < 1 or n % k != 0:
        raise InstanceValidationError(f"k = {k} must divide n = {n} for equal-size blocks")

    block_size = n // k
    order = rng.permutation(n)
    assignment = np.empty(n, dtype=np.int64)
    assignment[order] = np.arange(n) // block_size

    threshold = math.ceil(n / (2 * k))
    return PartitionMatroid(assignment=tuple(assignment.tolist()), thresholds=(threshold,) * k)
