"""
Comparison methodology for GSEMO against GREEDY.

- aggregate_runs: GSEMO-, GSEMO*, GSEMO+ per instance
- per_instance_verdict: one-sample signed-rank test of GSEMO's runs against
  GREEDY's deterministic value, giving Loss / Win / Tie
- paired_verdict / setting_verdicts: paired signed-rank tests across the
  instances of a setting, giving '+', '-' or '*'

All tests are two-sided at alpha = 0.05 with the drop-zeros convention.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

from partition_gsemo.errors import InsufficientDataError, MissingPairsError
from partition_gsemo.stats.models import (
    GREATER,
    LESS,
    NO_DIFFERENCE,
    STATISTICS,
    SettingSummary,
    Verdict,
)
from partition_gsemo.stats.wilcoxon import signed_rank_test

logger = logging.getLogger(__name__)

ALPHA = 0.05


def aggregate_runs(values: Sequence[float]) -> Tuple[float, float, float]:
    """
    (min, mean, max) of repeated run values.

    The mean is clamped into [min, max] so rounding never breaks the ordering.

    Raises:
        ValueError: on an empty list
    """
    if not values:
        raise ValueError("aggregate_runs needs at least one value")
    low, high = min(values), max(values)
    mean = math.fsum(values) / len(values)
    return float(low), float(min(max(mean, low), high)), float(high)


def per_instance_verdict(
    gsemo_values: Sequence[float], greedy_value: float, alpha: float = ALPHA
) -> Verdict:
    """
    Signed-rank test of GSEMO's repeated values against GREEDY's value.

    Fewer than 5 values differing from greedy_value cannot reach significance
    and yield TIE.
    """
    differences = [value - greedy_value for value in gsemo_values]
    try:
        result = signed_rank_test(differences)
    except InsufficientDataError:
        return Verdict.TIE

    if result.p_value < alpha:
        if result.direction > 0:
            return Verdict.WIN
        if result.direction < 0:
            return Verdict.LOSS
    return Verdict.TIE


def paired_verdict(a: Sequence[float], b: Sequence[float], alpha: float = ALPHA) -> str:
    """
    '+' if a is significantly greater than b, '-' if significantly less, '*' otherwise.

    Swapping a and b swaps '+' and '-'.
    """
    if len(a) != len(b):
        raise ValueError(f"Paired samples differ in length: {len(a)} vs {len(b)}")
    differences = [x - y for x, y in zip(a, b)]
    try:
        result = signed_rank_test(differences)
    except InsufficientDataError:
        logger.debug("Fewer than 5 non-zero paired differences; no significant difference")
        return NO_DIFFERENCE

    if result.p_value < alpha and result.direction != 0:
        return GREATER if result.direction > 0 else LESS
    return NO_DIFFERENCE


def setting_verdicts(
    greedy_values: Dict[str, float],
    gsemo_values: Dict[str, List[float]],
    n: int,
    constraint: str,
    density: Optional[float] = None,
    alpha: float = ALPHA,
) -> SettingSummary:
    """
    Summarise one setting, pairing GREEDY and GSEMO by instance id.

    Raises:
        MissingPairsError: naming instance ids present on only one side
    """
    missing = set(greedy_values) ^ set(gsemo_values)
    missing |= {key for key, values in gsemo_values.items() if not values}
    if missing:
        raise MissingPairsError(missing)

    keys = sorted(greedy_values)
    gsemo_stats = {key: aggregate_runs(gsemo_values[key]) for key in keys}
    greedy_column = [greedy_values[key] for key in keys]

    verdicts = {}
    for index, statistic in enumerate(STATISTICS):
        column = [gsemo_stats[key][index] for key in keys]
        verdicts[statistic] = paired_verdict(column, greedy_column, alpha)

    instance_verdicts = {
        key: per_instance_verdict(gsemo_values[key], greedy_values[key], alpha) for key in keys
    }
    tally = {verdict: 0 for verdict in Verdict}
    for verdict in instance_verdicts.values():
        tally[verdict] += 1

    return SettingSummary(
        n=n,
        density=density,
        constraint=constraint,
        greedy_values={key: greedy_values[key] for key in keys},
        gsemo_stats=gsemo_stats,
        verdicts=verdicts,
        losses=tally[Verdict.LOSS],
        wins=tally[Verdict.WIN],
        ties=tally[Verdict.TIE],
        instance_verdicts=instance_verdicts,
    )


def first_hitting_iteration(
    trace: Optional[Sequence[Tuple[int, float]]], target: float
) -> Optional[int]:
    """First sampled iteration whose best-so-far value reaches target, or None."""
    if not trace:
        return None
    for iteration, value in trace:
        if value >= target:
            return int(iteration)
    return None
