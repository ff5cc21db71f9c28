"""
Undirected weighted cut function.

f(X) = sum of w(u, v) over edges with exactly one endpoint in X.
Submodular, non-monotone and symmetric: f(X) = f(V \\ X).
"""

import numpy as np

from partition_gsemo.core.models import Solution
from partition_gsemo.objectives.base import SetFunction, masks_to_bits
from partition_gsemo.objectives.graph import WeightedGraph

# Upper bound on booleans materialised per batch chunk
_BATCH_CELLS = 1 << 22


class MaxCutFunction(SetFunction):
    """Cut oracle over a WeightedGraph; recomputes from scratch on each call."""

    def __init__(self, graph: WeightedGraph):
        self.graph = graph
        self._u, self._v, self._w = graph.edge_arrays

    @property
    def n(self) -> int:
        return self.graph.n

    def get_name(self) -> str:
        return "max_cut"

    def value(self, bits: np.ndarray) -> float:
        if self._w.shape[0] == 0:
            return 0.0
        crossing = bits[self._u] != bits[self._v]
        return float(self._w @ crossing)

    def batch_values(self, masks: np.ndarray) -> np.ndarray:
        masks = np.asarray(masks, dtype=np.int64)
        result = np.zeros(masks.shape[0], dtype=np.float64)
        if self._w.shape[0] == 0:
            return result

        chunk = max(1, _BATCH_CELLS // max(self._w.shape[0], self.n))
        for start in range(0, masks.shape[0], chunk):
            bits = masks_to_bits(masks[start : start + chunk], self.n)
            crossing = bits[:, self._u] != bits[:, self._v]
            result[start : start + chunk] = crossing @ self._w
        return result


def cut_value(g: WeightedGraph, x: Solution) -> float:
    """Cut weight of x in g, without oracle accounting."""
    return MaxCutFunction(g)(x)
