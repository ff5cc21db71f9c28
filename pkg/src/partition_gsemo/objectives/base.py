"""
Base class for set-function oracles.

Every objective implements value() on a boolean vector. Algorithms go through
query(), which charges the run's OracleCounter and enforces non-negativity.
Analysis code uses batch_values() for exhaustive enumeration; that path is not
a run and charges nothing.
"""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from partition_gsemo.core.models import OracleCounter, Solution
from partition_gsemo.errors import NegativeOracleValueError


def masks_to_bits(masks: np.ndarray, n: int) -> np.ndarray:
    """Expand integer masks into a (len(masks), n) boolean matrix, bit i -> column i."""
    masks = np.asarray(masks, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(bool)


class SetFunction(ABC):
    """Abstract black-box set function f: 2^V -> R+ over V = {0, ..., n-1}."""

    @property
    @abstractmethod
    def n(self) -> int:
        """Size of the ground set."""
        pass

    @abstractmethod
    def get_name(self) -> str:
        """Short identifier of the objective (e.g. 'max_cut')."""
        pass

    @abstractmethod
    def value(self, bits: np.ndarray) -> float:
        """
        Evaluate f on a boolean membership vector of length n.

        Args:
            bits: Boolean array, bits[i] set iff element i is selected

        Returns:
            f(X) as a float
        """
        pass

    def batch_values(self, masks: np.ndarray) -> np.ndarray:
        """
        Evaluate f on many subsets given as integer masks.

        Subclasses override this with a vectorised version; the default loops.
        """
        bits = masks_to_bits(masks, self.n)
        return np.array([self.value(row) for row in bits], dtype=np.float64)

    def query(self, x: Solution, counter: OracleCounter) -> float:
        """
        Evaluate f(x) as one oracle call charged to counter.

        Raises:
            LengthMismatchError: if x does not have length n
            NegativeOracleValueError: if f(x) < 0
        """
        x.check_length(self.n)
        counter.charge()
        result = float(self.value(x.bits))
        if result < 0:
            raise NegativeOracleValueError(
                f"{self.get_name()} returned {result} for {x}; objectives must be non-negative"
            )
        return result

    def __call__(self, x: Solution) -> float:
        """Evaluate without accounting (for inspection and tests)."""
        x.check_length(self.n)
        return float(self.value(x.bits))


def marginal_gain(
    f: SetFunction,
    x: Solution,
    v: int,
    c: OracleCounter,
    base_value: Optional[float] = None,
) -> float:
    """
    Compute f(x ∪ {v}) - f(x).

    Charges two oracle calls, or one when the caller passes the cached f(x)
    as base_value.

    Raises:
        ValueError: if v is already in x
    """
    if v in x:
        raise ValueError(f"Element {v} is already in {x}")

    if base_value is None:
        base_value = f.query(x, c)
    return f.query(x.with_element(v), c) - base_value
