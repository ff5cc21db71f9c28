"""
Table formatting for setting summaries.

Layout of one summary row (one setting):
- n, density, constraint (d1=.. or k=..), number of instances
- GREEDY: min and max over instances
- GSEMO-, GSEMO*, GSEMO+: min and max over instances, plus the paired test verdict
- L-W-T counts of the per-instance tests

CSV goes through pandas; the Markdown table is rendered directly.
"""

import io
import logging
from typing import Dict, List, Optional

import pandas as pd

from partition_gsemo.algorithms.greedy import GREEDY
from partition_gsemo.algorithms.gsemo import GSEMO
from partition_gsemo.config.algorithm_config import AlgorithmConfig
from partition_gsemo.stats.models import STATISTICS, SettingSummary

logger = logging.getLogger(__name__)

# Column suffix and display symbol of GSEMO-, GSEMO*, GSEMO+
STATISTIC_LABELS = {"min": "-", "mean": "*", "max": "+"}

SUMMARY_COLUMNS = [
    "n",
    "density",
    "constraint",
    "instances",
    "greedy_min",
    "greedy_max",
    "gsemo_min_min",
    "gsemo_min_max",
    "gsemo_min_verdict",
    "gsemo_mean_min",
    "gsemo_mean_max",
    "gsemo_mean_verdict",
    "gsemo_max_min",
    "gsemo_max_max",
    "gsemo_max_verdict",
    "losses",
    "wins",
    "ties",
]


class TableFormatter:
    """
    Formats setting summaries as CSV and Markdown.

    Display names and the footer note come from algorithm_descriptions.yaml.
    """

    def __init__(self, algorithm_config: Optional[AlgorithmConfig] = None, precision: int = 2):
        """
        Initialize table formatter.

        Args:
            algorithm_config: Source of display names and the footer note
            precision: Decimal places of values in the Markdown table
        """
        self.algorithm_config = algorithm_config or AlgorithmConfig()
        self.precision = precision

    def summary_row(self, summary: SettingSummary) -> Dict:
        greedy = list(summary.greedy_values.values())
        row = {
            "n": summary.n,
            "density": summary.density,
            "constraint": summary.constraint,
            "instances": summary.instance_count,
            "greedy_min": min(greedy),
            "greedy_max": max(greedy),
        }
        for statistic in STATISTICS:
            column = summary.column(statistic)
            row[f"gsemo_{statistic}_min"] = min(column)
            row[f"gsemo_{statistic}_max"] = max(column)
            row[f"gsemo_{statistic}_verdict"] = summary.verdicts[statistic]
        row.update({"losses": summary.losses, "wins": summary.wins, "ties": summary.ties})
        return row

    def summary_frame(self, summaries: List[SettingSummary]) -> pd.DataFrame:
        return pd.DataFrame([self.summary_row(s) for s in summaries], columns=SUMMARY_COLUMNS)

    def summary_csv(self, summaries: List[SettingSummary]) -> str:
        return self._csv(self.summary_frame(summaries))

    def rows_csv(self, rows: List[Dict]) -> str:
        """CSV of arbitrary row dicts, columns in first-row order."""
        columns = list(rows[0]) if rows else []
        return self._csv(pd.DataFrame(rows, columns=columns))

    @staticmethod
    def _csv(frame: pd.DataFrame) -> str:
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    def _range(self, low: float, high: float) -> str:
        return f"{low:.{self.precision}f}-{high:.{self.precision}f}"

    def summary_markdown(self, summaries: List[SettingSummary]) -> str:
        """Markdown table with one row per setting and a footer describing the columns."""
        greedy_name = self.algorithm_config.get_name(GREEDY)
        gsemo_name = self.algorithm_config.get_name(GSEMO)

        header = ["n", "density", "constraint", greedy_name]
        for statistic in STATISTICS:
            header.extend([f"{gsemo_name}{STATISTIC_LABELS[statistic]}", ""])
        header.append("L-W-T")

        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join(["---"] * len(header)) + "|",
        ]
        for summary in summaries:
            row = self.summary_row(summary)
            cells = [
                str(summary.n),
                "" if summary.density is None else f"{summary.density:g}",
                summary.constraint,
                self._range(row["greedy_min"], row["greedy_max"]),
            ]
            for statistic in STATISTICS:
                cells.append(
                    self._range(row[f"gsemo_{statistic}_min"], row[f"gsemo_{statistic}_max"])
                )
                cells.append(row[f"gsemo_{statistic}_verdict"])
            cells.append(summary.lwt)
            lines.append("| " + " | ".join(cells) + " |")

        footer = self.algorithm_config.statistics_note
        if footer:
            lines.append("")
            lines.extend(footer.splitlines())
        notes = self.algorithm_notes()
        if notes:
            lines.append("")
            lines.extend(notes)
        logger.debug(f"Formatted Markdown table with {len(summaries)} rows")
        return "\n".join(lines) + "\n"

    def algorithm_notes(self) -> List[str]:
        """One Markdown bullet per described algorithm, description joined onto one line."""
        notes = []
        for key in self.algorithm_config.list_algorithms():
            description = " ".join(self.algorithm_config.get_description(key).split())
            if description:
                notes.append(f"- {self.algorithm_config.get_name(key)}: {description}")
        return notes

    def format_record(self, record) -> str:
        """One-line human summary of a RunRecord for CLI output."""
        name = self.algorithm_config.get_name(record.algorithm)
        parts = [
            f"{name}: value={record.best_value!r}",
            f"|X|={len(record.best_solution)}",
            f"oracle_calls={record.oracle_calls}",
        ]
        if record.iterations is not None:
            parts.append(f"T={record.iterations}")
        return ", ".join(parts)
