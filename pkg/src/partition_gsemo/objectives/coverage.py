"""
Weighted coverage function.

Each element covers a subset of a weighted universe; f(X) is the total weight of
the items covered by at least one element of X. Monotone and submodular.
"""

from typing import List, Sequence

import numpy as np

from partition_gsemo.errors import InstanceValidationError
from partition_gsemo.objectives.base import SetFunction, masks_to_bits

_BATCH_CELLS = 1 << 22


class CoverageFunction(SetFunction):
    """
    Weighted coverage over a universe of len(item_weights) items.

    Args:
        item_weights: Non-negative weight per universe item
        covers: For each element, the universe items it covers
    """

    def __init__(self, item_weights: Sequence[float], covers: Sequence[Sequence[int]]):
        weights = np.array(item_weights, dtype=np.float64)
        if weights.ndim != 1 or np.any(weights < 0) or not np.all(np.isfinite(weights)):
            raise InstanceValidationError("Coverage item weights must be finite and non-negative")
        if len(covers) < 1:
            raise InstanceValidationError("Coverage function needs at least one element")

        matrix = np.zeros((len(covers), weights.shape[0]), dtype=bool)
        for element, items in enumerate(covers):
            for item in items:
                if not 0 <= item < weights.shape[0]:
                    raise InstanceValidationError(
                        f"Element {element} covers unknown item {item}"
                    )
                matrix[element, item] = True

        weights.setflags(write=False)
        matrix.setflags(write=False)
        self.item_weights = weights
        self.cover_matrix = matrix

    @property
    def n(self) -> int:
        return int(self.cover_matrix.shape[0])

    @property
    def covers(self) -> List[List[int]]:
        return [[int(i) for i in np.flatnonzero(row)] for row in self.cover_matrix]

    def get_name(self) -> str:
        return "coverage"

    def value(self, bits: np.ndarray) -> float:
        covered = self.cover_matrix[bits].any(axis=0)
        return float(self.item_weights[covered].sum())

    def batch_values(self, masks: np.ndarray) -> np.ndarray:
        masks = np.asarray(masks, dtype=np.int64)
        result = np.zeros(masks.shape[0], dtype=np.float64)
        cover = self.cover_matrix.astype(np.int64)
        chunk = max(1, _BATCH_CELLS // max(cover.shape[1], self.n, 1))
        for start in range(0, masks.shape[0], chunk):
            bits = masks_to_bits(masks[start : start + chunk], self.n).astype(np.int64)
            covered = (bits @ cover) > 0
            result[start : start + chunk] = covered @ self.item_weights
        return result


def random_coverage(
    n: int, universe_size: int, rng: np.random.Generator, cover_probability: float = 0.3
) -> CoverageFunction:
    """
    Sample a coverage function: item weights uniform in [0, 1], each element
    covering each item independently with cover_probability.
    """
    weights = rng.random(universe_size)
    membership = rng.random((n, universe_size)) < cover_probability
    covers = [[int(i) for i in np.flatnonzero(row)] for row in membership]
    return CoverageFunction(weights, covers)
