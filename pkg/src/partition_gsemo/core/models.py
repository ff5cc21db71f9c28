"""
Value objects shared by the solvers and the analysis tooling.

This module defines:
- Solution: immutable bit vector over the ground set {0, ..., n-1}
- PartitionMatroid: block assignment plus per-block thresholds
- BiValue: the (f1, f2) objective pair with an explicit negative-infinity state
- OracleCounter: per-run count of objective evaluations

Elements are 0-indexed integers.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Tuple, Union

import numpy as np

from partition_gsemo.errors import InstanceValidationError, LengthMismatchError


class Solution:
    """
    Subset of the ground set stored as a read-only boolean vector.

    The cardinality is cached at construction; the bit vector is never written to
    after that, so both stay consistent.
    """

    __slots__ = ("_bits", "_cardinality")

    def __init__(self, bits: Union[np.ndarray, Iterable[bool]]):
        array = np.array(bits, dtype=bool, copy=True).reshape(-1)
        array.setflags(write=False)
        self._bits = array
        self._cardinality = int(np.count_nonzero(array))

    @classmethod
    def empty(cls, n: int) -> "Solution":
        return cls(np.zeros(n, dtype=bool))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "Solution":
        """Build a solution of length n containing the given elements."""
        bits = np.zeros(n, dtype=bool)
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"Element {i} outside ground set of size {n}")
            bits[i] = True
        return cls(bits)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Solution":
        """Build a solution from an integer whose bit i encodes element i."""
        return cls([(mask >> i) & 1 for i in range(n)])

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def n(self) -> int:
        return self._bits.shape[0]

    @property
    def cardinality(self) -> int:
        return self._cardinality

    def indices(self) -> List[int]:
        """Elements present in the solution, in increasing order."""
        return [int(i) for i in np.flatnonzero(self._bits)]

    def to_mask(self) -> int:
        return sum(1 << i for i in self.indices())

    def with_element(self, v: int) -> "Solution":
        """Return a new solution with element v added."""
        bits = self._bits.copy()
        bits[v] = True
        return Solution(bits)

    def without_element(self, v: int) -> "Solution":
        """Return a new solution with element v removed."""
        bits = self._bits.copy()
        bits[v] = False
        return Solution(bits)

    def check_length(self, n: int):
        """Raise LengthMismatchError unless this solution has length n."""
        if self.n != n:
            raise LengthMismatchError(f"Solution has length {self.n}, expected {n}")

    def __contains__(self, v: int) -> bool:
        return bool(self._bits[v])

    def __len__(self) -> int:
        return self._cardinality

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Solution):
            return NotImplemented
        return np.array_equal(self._bits, other._bits)

    def __hash__(self) -> int:
        return hash((self.n, self._bits.tobytes()))

    def __repr__(self) -> str:
        return f"Solution(n={self.n}, elements={self.indices()})"


@dataclass(frozen=True, eq=False)
class PartitionMatroid:
    """
    Partition matroid constraint: element i belongs to block assignment[i] and
    a feasible set holds at most thresholds[b] elements of block b.

    Invariants (checked at construction):
    - every block index lies in 0..k-1 and every block is non-empty
    - 1 <= thresholds[b] <= |B_b|
    """

    assignment: Tuple[int, ...]
    thresholds: Tuple[int, ...]
    _assignment_array: np.ndarray = field(init=False, repr=False, compare=False)
    _thresholds_array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(b) for b in self.assignment))
        object.__setattr__(self, "thresholds", tuple(int(t) for t in self.thresholds))

        k = len(self.thresholds)
        if k < 1:
            raise InstanceValidationError("A partition matroid needs at least one block")
        if len(self.assignment) < 1:
            raise InstanceValidationError("A partition matroid needs a non-empty ground set")

        for element, block in enumerate(self.assignment):
            if not 0 <= block < k:
                raise InstanceValidationError(
                    f"Element {element} assigned to block {block}, expected 0..{k - 1}"
                )

        array = np.array(self.assignment, dtype=np.int64)
        array.setflags(write=False)
        object.__setattr__(self, "_assignment_array", array)

        limits = np.array(self.thresholds, dtype=np.int64)
        limits.setflags(write=False)
        object.__setattr__(self, "_thresholds_array", limits)

        sizes = self.block_sizes
        for block, (size, threshold) in enumerate(zip(sizes, self.thresholds)):
            if size == 0:
                raise InstanceValidationError(f"Block {block} is empty")
            if not 1 <= threshold <= size:
                raise InstanceValidationError(
                    f"Block {block} threshold {threshold} outside 1..{size}"
                )

    @classmethod
    def cardinality(cls, n: int, d: int) -> "PartitionMatroid":
        """Single block holding all n elements with threshold d."""
        return cls(assignment=(0,) * n, thresholds=(d,))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def k(self) -> int:
        return len(self.thresholds)

    @property
    def d(self) -> int:
        """Sum of thresholds; an upper bound on the size of any feasible set."""
        return sum(self.thresholds)

    @property
    def dbar(self) -> int:
        """Smallest block threshold."""
        return min(self.thresholds)

    @property
    def block_sizes(self) -> List[int]:
        return [int(c) for c in np.bincount(self._assignment_array, minlength=self.k)]

    @property
    def assignment_array(self) -> np.ndarray:
        return self._assignment_array

    @property
    def thresholds_array(self) -> np.ndarray:
        return self._thresholds_array

    def block_of(self, v: int) -> int:
        return self.assignment[v]

    def block_counts(self, x: Solution) -> np.ndarray:
        """Number of selected elements per block."""
        x.check_length(self.n)
        return np.bincount(self._assignment_array[x.bits], minlength=self.k)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "assignment": list(self.assignment),
            "thresholds": list(self.thresholds),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PartitionMatroid":
        """
        Build from the constraint file layout
        {"n": int, "k": int, "assignment": [int; n], "thresholds": [int; k]}.
        """
        try:
            n = int(data["n"])
            k = int(data["k"])
            assignment = [int(b) for b in data["assignment"]]
            thresholds = [int(t) for t in data["thresholds"]]
        except KeyError as e:
            raise InstanceValidationError(f"Constraint is missing field {e}") from e
        except (TypeError, ValueError) as e:
            raise InstanceValidationError(f"Constraint has a non-integer field: {e}") from e

        if len(assignment) != n:
            raise InstanceValidationError(
                f"Constraint assignment has {len(assignment)} entries, n = {n}"
            )
        if len(thresholds) != k:
            raise InstanceValidationError(
                f"Constraint thresholds has {len(thresholds)} entries, k = {k}"
            )
        return cls(assignment=tuple(assignment), thresholds=tuple(thresholds))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionMatroid):
            return NotImplemented
        return self.assignment == other.assignment and self.thresholds == other.thresholds

    def __hash__(self) -> int:
        return hash((self.assignment, self.thresholds))


class Extended(Enum):
    """Values outside the reals used by the first objective."""

    NEGATIVE_INFINITY = "-inf"


NEGATIVE_INFINITY = Extended.NEGATIVE_INFINITY

F1Value = Union[float, Extended]


@dataclass(frozen=True)
class BiValue:
    """
    Objective pair (f1, f2) of a solution.

    f1 is f(X) for feasible X and NEGATIVE_INFINITY otherwise; f2 = -|X|.
    """

    f1: F1Value
    f2: int

    @property
    def is_feasible(self) -> bool:
        return self.f1 is not NEGATIVE_INFINITY

    @property
    def value(self) -> float:
        """f1 as a float, with -inf for infeasible solutions."""
        return -math.inf if self.f1 is NEGATIVE_INFINITY else float(self.f1)

    def f1_at_least(self, other: "BiValue") -> bool:
        if other.f1 is NEGATIVE_INFINITY:
            return True
        if self.f1 is NEGATIVE_INFINITY:
            return False
        return self.f1 >= other.f1

    def f1_greater(self, other: "BiValue") -> bool:
        if self.f1 is NEGATIVE_INFINITY:
            return False
        if other.f1 is NEGATIVE_INFINITY:
            return True
        return self.f1 > other.f1


class Dominance(str, Enum):
    """Outcome of comparing one BiValue against another."""

    STRICTLY_DOMINATES = "strictly_dominates"
    WEAKLY_DOMINATES = "weakly_dominates"
    NONE = "none"


class OracleCounter:
    """
    Number of objective evaluations charged to one run.

    Confined to a single run; never reset.
    """

    __slots__ = ("_calls",)

    def __init__(self):
        self._calls = 0

    @property
    def calls(self) -> int:
        return self._calls

    def charge(self, count: int = 1):
        if count < 0:
            raise ValueError("Oracle call charges must be non-negative")
        self._calls += count

    def __repr__(self) -> str:
        return f"OracleCounter(calls={self._calls})"
