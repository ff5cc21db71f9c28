"""Signed-rank tests, verdicts and GSEMO-/*/+ aggregation."""

from partition_gsemo.stats.models import SettingSummary, Verdict
from partition_gsemo.stats.verdicts import (
    ALPHA,
    aggregate_runs,
    first_hitting_iteration,
    paired_verdict,
    per_instance_verdict,
    setting_verdicts,
)
from partition_gsemo.stats.wilcoxon import SignedRankResult, signed_rank_test, wilcoxon_signed_rank

__all__ = [
    "ALPHA",
    "SettingSummary",
    "SignedRankResult",
    "Verdict",
    "aggregate_runs",
    "first_hitting_iteration",
    "paired_verdict",
    "per_instance_verdict",
    "setting_verdicts",
    "signed_rank_test",
    "wilcoxon_signed_rank",
]
