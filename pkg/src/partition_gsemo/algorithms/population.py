"""
GSEMO population: an archive of mutually non-dominated (Solution, BiValue) pairs.

Entries are kept ordered by cardinality. Starting from the empty solution and
applying survival_update keeps every entry feasible, at most one entry per
cardinality, and therefore at most d + 1 entries.
"""

import math
from typing import Iterable, Iterator, List, Tuple

import numpy as np

from partition_gsemo.core.bi_objective import dominance
from partition_gsemo.core.models import BiValue, Dominance, Solution

Entry = Tuple[Solution, BiValue]


class Population:
    """Immutable archive; survival_update returns a new Population."""

    __slots__ = ("_entries", "_f1", "_f2")

    def __init__(self, entries: Iterable[Entry]):
        ordered = sorted(entries, key=lambda entry: entry[0].cardinality)
        self._entries: Tuple[Entry, ...] = tuple(ordered)
        self._f1: Tuple[float, ...] = tuple(value.value for _, value in ordered)
        self._f2: Tuple[int, ...] = tuple(value.f2 for _, value in ordered)

    @property
    def entries(self) -> Tuple[Entry, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Entry]:
        return iter(self._entries)

    def sample(self, rng: np.random.Generator) -> Entry:
        """Uniform parent selection."""
        return self._entries[int(rng.integers(len(self._entries)))]

    def best(self) -> Entry:
        """Entry maximizing f1; ties go to the smaller cardinality."""
        best_index = 0
        for index in range(1, len(self._entries)):
            if self._f1[index] > self._f1[best_index]:
                best_index = index
        return self._entries[best_index]

    @property
    def best_value(self) -> float:
        return max(self._f1)

    def survival_update(self, candidate: Entry) -> "Population":
        """
        Offer a candidate to the archive.

        If an entry strictly dominates the candidate, the archive is unchanged.
        Otherwise every entry the candidate weakly dominates is removed and the
        candidate is inserted.
        """
        _, value = candidate
        y_f1 = value.value
        y_f2 = value.f2

        # Same comparisons as core.dominance, on floats where NEGATIVE_INFINITY is -inf
        for f1, f2 in zip(self._f1, self._f2):
            if f1 >= y_f1 and f2 >= y_f2 and (f1 > y_f1 or f2 > y_f2):
                return self

        kept: List[Entry] = [
            entry
            for entry, f1, f2 in zip(self._entries, self._f1, self._f2)
            if not (y_f1 >= f1 and y_f2 >= f2)
        ]
        kept.append(candidate)
        return Population(kept)

    def invariant_violations(self, d: int) -> List[str]:
        """
        Describe every broken archive invariant (empty list when all hold).

        Checks mutual non-domination, feasibility, size <= d + 1 and presence of
        the empty solution.
        """
        problems: List[str] = []
        if len(self._entries) > d + 1:
            problems.append(f"size {len(self._entries)} exceeds d + 1 = {d + 1}")
        if not any(solution.cardinality == 0 for solution, _ in self._entries):
            problems.append("empty solution missing")
        for solution, value in self._entries:
            if not value.is_feasible or math.isinf(value.value):
                problems.append(f"infeasible entry {solution}")
        for i, (a, value_a) in enumerate(self._entries):
            for j, (b, value_b) in enumerate(self._entries):
                if i != j and dominance(value_a, value_b) is not Dominance.NONE:
                    problems.append(f"{a} weakly dominates {b}")
        return problems

    def __repr__(self) -> str:
        return f"Population(size={len(self._entries)}, best={self.best_value})"


def survival_update(population: Population, candidate: Entry) -> Population:
    """Functional form of Population.survival_update."""
    return population.survival_update(candidate)
