"""
Base class for solvers.

A solver maximizes a set function under a partition matroid and reports a
RunRecord. Oracle calls are charged to the counter passed in by the caller.
"""

from abc import ABC, abstractmethod

from partition_gsemo.algorithms.models import RunRecord
from partition_gsemo.core.models import OracleCounter, PartitionMatroid
from partition_gsemo.objectives.base import SetFunction


class Solver(ABC):
    """Abstract base class for constrained set-function maximizers."""

    @abstractmethod
    def get_name(self) -> str:
        """Algorithm tag stored in RunRecord.algorithm."""
        pass

    @abstractmethod
    def solve(
        self, f: SetFunction, m: PartitionMatroid, counter: OracleCounter
    ) -> RunRecord:
        """
        Run the algorithm once.

        Args:
            f: Objective oracle
            m: Partition matroid constraint over the same ground set
            counter: Oracle-call counter owned by this run

        Returns:
            RunRecord with the best feasible solution found
        """
        pass
