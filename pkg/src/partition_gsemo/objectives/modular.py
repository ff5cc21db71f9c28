"""Modular (linear) set function: f(X) = sum of weights[i] for i in X."""

from typing import Sequence

import numpy as np

from partition_gsemo.errors import InstanceValidationError
from partition_gsemo.objectives.base import SetFunction, masks_to_bits


class ModularFunction(SetFunction):
    """
    Linear objective with non-negative weights.

    Monotone, with submodularity ratio exactly 1; used to validate the analysis tools.
    """

    def __init__(self, weights: Sequence[float]):
        array = np.array(weights, dtype=np.float64)
        if array.ndim != 1 or array.shape[0] < 1:
            raise InstanceValidationError("Modular weights must be a non-empty 1-D sequence")
        if np.any(array < 0) or not np.all(np.isfinite(array)):
            raise InstanceValidationError("Modular weights must be finite and non-negative")
        array.setflags(write=False)
        self.weights = array

    @property
    def n(self) -> int:
        return int(self.weights.shape[0])

    def get_name(self) -> str:
        return "modular"

    def value(self, bits: np.ndarray) -> float:
        return float(self.weights[bits].sum())

    def batch_values(self, masks: np.ndarray) -> np.ndarray:
        bits = masks_to_bits(masks, self.n)
        return bits @ self.weights
