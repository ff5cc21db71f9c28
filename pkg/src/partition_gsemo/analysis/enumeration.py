"""
Helpers for exhaustive enumeration over all 2^n subsets, encoded as integer
masks where bit i stands for element i.
"""

import numpy as np

from partition_gsemo.core.models import PartitionMatroid
from partition_gsemo.errors import EnumerationGuardError
from partition_gsemo.objectives.base import SetFunction

_CHUNK = 1 << 16


def guard(operation: str, n: int, limit: int):
    """Refuse enumeration beyond n = limit."""
    if n > limit:
        raise EnumerationGuardError(operation, n, limit)


def all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def popcounts(n: int) -> np.ndarray:
    """popcounts(n)[mask] = number of set bits of mask, for mask < 2^n."""
    counts = np.zeros(1 << n, dtype=np.int64)
    for bit in range(n):
        counts[1 << bit : 2 << bit] = counts[: 1 << bit] + 1
    return counts


def value_table(f: SetFunction, n: int) -> np.ndarray:
    """values[mask] = f(mask) for every subset of the ground set."""
    if f.n != n:
        raise ValueError(f"Objective has {f.n} elements, expected {n}")
    masks = all_masks(n)
    table = np.empty(masks.shape[0], dtype=np.float64)
    for start in range(0, masks.shape[0], _CHUNK):
        table[start : start + _CHUNK] = f.batch_values(masks[start : start + _CHUNK])
    return table


def feasible_masks(m: PartitionMatroid) -> np.ndarray:
    """Boolean array marking which masks satisfy every block threshold."""
    masks = all_masks(m.n)
    counts = popcounts(m.n)
    feasible = np.ones(masks.shape[0], dtype=bool)
    for block, threshold in enumerate(m.thresholds):
        block_mask = sum(1 << v for v in range(m.n) if m.block_of(v) == block)
        feasible &= counts[masks & block_mask] <= threshold
    return feasible
