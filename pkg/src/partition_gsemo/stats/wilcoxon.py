"""
Wilcoxon signed-rank test.

Conventions:
- zero differences are dropped before ranking
- tied absolute differences receive average ranks
- the statistic is W+ (sum of ranks of positive differences)
- two-sided p-value from the exact null distribution when at most 15 non-zero
  differences remain, otherwise from the normal approximation with tie and
  continuity corrections
"""

import math
from typing import Literal, NamedTuple, Sequence, Tuple

import numpy as np
from scipy import stats

from partition_gsemo.errors import InsufficientDataError

MIN_NONZERO = 5
EXACT_LIMIT = 15

Method = Literal["auto", "exact", "approx"]


class SignedRankResult(NamedTuple):
    """Outcome of a signed-rank test on a vector of differences."""

    statistic: float
    p_value: float
    n_used: int
    method: str
    expected: float

    @property
    def direction(self) -> int:
        """+1 when positive differences dominate the ranks, -1 when negative, 0 when balanced."""
        if self.statistic > self.expected:
            return 1
        if self.statistic < self.expected:
            return -1
        return 0


def _exact_p(doubled_ranks: np.ndarray, doubled_statistic: int) -> float:
    """Two-sided p-value by enumerating all 2^n sign assignments (as a convolution)."""
    total = int(doubled_ranks.sum())
    counts = np.zeros(total + 1, dtype=np.float64)
    counts[0] = 1.0
    for rank in doubled_ranks:
        shifted = np.zeros_like(counts)
        shifted[rank:] = counts[: total + 1 - rank]
        counts = counts + shifted

    assignments = 2.0 ** doubled_ranks.shape[0]
    lower = counts[: doubled_statistic + 1].sum() / assignments
    upper = counts[doubled_statistic:].sum() / assignments
    return min(1.0, 2.0 * min(lower, upper))


def _approx_p(statistic: float, n: int, tie_counts: np.ndarray) -> float:
    mean = n * (n + 1) / 4.0
    variance = n * (n + 1) * (2 * n + 1) / 24.0 - float(np.sum(tie_counts**3 - tie_counts)) / 48.0
    if variance <= 0:
        return 1.0
    distance = max(abs(statistic - mean) - 0.5, 0.0)
    z = distance / math.sqrt(variance)
    return min(1.0, 2.0 * float(stats.norm.sf(z)))


def signed_rank_test(differences: Sequence[float], method: Method = "auto") -> SignedRankResult:
    """
    Signed-rank test of differences against a symmetric distribution around 0.

    Args:
        differences: Paired differences a - b
        method: "exact", "approx", or "auto" (exact up to 15 non-zero differences)

    Raises:
        InsufficientDataError: fewer than 5 non-zero differences
    """
    values = np.asarray(differences, dtype=np.float64)
    nonzero = values[values != 0]
    n = int(nonzero.shape[0])
    if n < MIN_NONZERO:
        raise InsufficientDataError(
            f"Signed-rank test needs at least {MIN_NONZERO} non-zero differences, got {n}"
        )

    magnitudes = np.abs(nonzero)
    ranks = stats.rankdata(magnitudes, method="average")
    statistic = float(ranks[nonzero > 0].sum())
    expected = n * (n + 1) / 4.0

    if method == "auto":
        method = "exact" if n <= EXACT_LIMIT else "approx"

    if method == "exact":
        # average ranks are multiples of 1/2, so doubling makes them integers
        doubled = np.rint(ranks * 2).astype(np.int64)
        p_value = _exact_p(doubled, int(round(statistic * 2)))
    elif method == "approx":
        _, tie_counts = np.unique(magnitudes, return_counts=True)
        p_value = _approx_p(statistic, n, tie_counts.astype(np.float64))
    else:
        raise ValueError(f"Unknown method {method!r}")

    return SignedRankResult(statistic, p_value, n, method, expected)


def wilcoxon_signed_rank(
    pairs: Sequence[Tuple[float, float]], method: Method = "auto"
) -> Tuple[float, float]:
    """
    Paired signed-rank test on (a, b) pairs.

    Returns:
        (W+, two-sided p-value) for the differences a - b
    """
    differences = [a - b for a, b in pairs]
    result = signed_rank_test(differences, method=method)
    return result.statistic, result.p_value
