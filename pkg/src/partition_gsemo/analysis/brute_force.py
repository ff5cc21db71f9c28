"""Exhaustive optimum of a set function under a partition matroid."""

import logging
from typing import Tuple

import numpy as np

from partition_gsemo.analysis.enumeration import (
    all_masks,
    feasible_masks,
    guard,
    popcounts,
    value_table,
)
from partition_gsemo.core.models import PartitionMatroid, Solution
from partition_gsemo.objectives.base import SetFunction

logger = logging.getLogger(__name__)

MAX_BRUTE_FORCE_N = 24


def brute_force_opt(f: SetFunction, m: PartitionMatroid) -> Tuple[Solution, float]:
    """
    Feasible subset maximizing f.

    Ties are broken by smallest cardinality, then by the lexicographically
    smallest bit vector (element 0 first).

    Raises:
        EnumerationGuardError: if n > 24
    """
    n = m.n
    guard("brute_force_opt", n, MAX_BRUTE_FORCE_N)
    if f.n != n:
        raise ValueError(f"Constraint covers {n} elements, objective has {f.n}")

    values = value_table(f, n)
    feasible = feasible_masks(m)
    best = float(values[feasible].max())

    candidates = all_masks(n)[feasible & (values == best)]
    sizes = popcounts(n)[candidates]
    smallest = candidates[sizes == sizes.min()]

    # Lexicographic on (bit 0, bit 1, ...): reverse the bit order and take the minimum
    reversed_keys = [int(format(int(mask), f"0{n}b")[::-1], 2) for mask in smallest]
    winner = int(smallest[int(np.argmin(reversed_keys))])

    solution = Solution.from_mask(n, winner)
    logger.debug(f"brute force optimum {best} at {solution}")
    return solution, best
