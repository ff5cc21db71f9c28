"""
Exhaustive evaluators for the structural quantities of a set function.

- epsilon_j: monotonicity approximation term, the largest gain obtainable by
  removing one element from a set of size < j
- gamma_ij: submodularity ratio over X with |X| < i and L with |L| <= j
- check_submodular / is_monotone: definitional scans

All inequalities are checked with an absolute tolerance of 1e-9.
"""

import logging
import math

import numpy as np

from partition_gsemo.analysis.enumeration import all_masks, guard, popcounts, value_table
from partition_gsemo.objectives.base import SetFunction, masks_to_bits

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9

MAX_EPSILON_N = 20
MAX_GAMMA_N = 16
MAX_SUBMODULAR_N = 12
MAX_MONOTONE_N = 20


def epsilon_j(f: SetFunction, n: int, j: int) -> float:
    """
    max over X with |X| < j and v in V of f(X \\ {v}) - f(X); 0 when j = 0.

    The v not in X terms contribute 0, so the result is never negative.

    Raises:
        ValueError: if j < 0
        EnumerationGuardError: if n > 20
    """
    if j < 0:
        raise ValueError(f"j must be non-negative, got {j}")
    guard("epsilon_j", n, MAX_EPSILON_N)
    if j == 0:
        return 0.0

    values = value_table(f, n)
    masks = all_masks(n)
    small = popcounts(n) < j

    best = 0.0
    for v in range(n):
        bit = 1 << v
        members = masks[small & ((masks & bit) != 0)]
        if members.size:
            best = max(best, float((values[members ^ bit] - values[members]).max()))
    return best


def is_monotone(f: SetFunction, n: int) -> bool:
    """True iff f(X ∪ {v}) >= f(X) - 1e-9 for all X and v."""
    guard("is_monotone", n, MAX_MONOTONE_N)
    values = value_table(f, n)
    masks = all_masks(n)
    for v in range(n):
        bit = 1 << v
        without = masks[(masks & bit) == 0]
        if np.any(values[without | bit] < values[without] - TOLERANCE):
            return False
    return True


def gamma_ij(f: SetFunction, n: int, i: int, j: int) -> float:
    """
    Submodularity ratio: min over X with |X| < i, non-empty L with |L| <= j,
    X ∩ L = ∅ of sum_{v in L} [f(X+v) - f(X)] / [f(X ∪ L) - f(X)].

    Pairs whose denominator is zero (within 1e-9) are skipped. i = 0 is treated
    as i = 1. f is assumed monotone; callers can check with is_monotone().

    Returns:
        The ratio, or math.inf when no pair has a non-zero denominator

    Raises:
        ValueError: if i < 0 or j < 1
        EnumerationGuardError: if n > 16
    """
    if i < 0 or j < 1:
        raise ValueError(f"gamma needs i >= 0 and j >= 1, got i = {i}, j = {j}")
    guard("gamma_ij", n, MAX_GAMMA_N)
    i = max(i, 1)

    values = value_table(f, n)
    masks = all_masks(n)
    counts = popcounts(n)
    membership = masks_to_bits(masks, n).astype(np.float64)
    lower_sets = masks[counts < i]
    candidate_sets = masks[(counts >= 1) & (counts <= j)]

    best = math.inf
    for x in lower_sets:
        x = int(x)
        sets = candidate_sets[(candidate_sets & x) == 0]
        if sets.size == 0:
            continue
        base = values[x]
        singles = np.array(
            [values[x | (1 << v)] - base if not (x >> v) & 1 else 0.0 for v in range(n)]
        )
        numerators = membership[sets] @ singles
        denominators = values[sets | x] - base
        informative = np.abs(denominators) > TOLERANCE
        if np.any(informative):
            best = min(best, float((numerators[informative] / denominators[informative]).min()))

    if math.isinf(best):
        logger.warning(
            f"gamma_ij(i={i}, j={j}) has no pair with a non-zero denominator; returning inf"
        )
    return best


def check_submodular(f: SetFunction, n: int) -> bool:
    """
    True iff f(X+v) - f(X) >= f(Y+v) - f(Y) - 1e-9 for all X ⊆ Y ⊆ V, v not in Y.

    For each v the minimum gain over all subsets of Y is computed with a
    subset-minimum sweep, which covers every (X, Y) pair.

    Raises:
        EnumerationGuardError: if n > 12
    """
    guard("check_submodular", n, MAX_SUBMODULAR_N)
    values = value_table(f, n)
    masks = all_masks(n)

    for v in range(n):
        bit = 1 << v
        gains = np.full(masks.shape[0], np.inf)
        without = (masks & bit) == 0
        gains[without] = values[masks[without] | bit] - values[masks[without]]

        # subset_min[Y] = min over X ⊆ Y of gains[X]
        subset_min = gains.copy()
        for b in range(n):
            has_b = ((masks >> b) & 1) == 1
            subset_min[has_b] = np.minimum(subset_min[has_b], subset_min[masks[has_b] ^ (1 << b)])

        if np.any(subset_min[without] < gains[without] - TOLERANCE):
            logger.debug(f"submodularity violated for element {v}")
            return False
    return True
