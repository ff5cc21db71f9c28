"""Report generation: per-setting summaries, CSV and Markdown tables."""

from partition_gsemo.reporting.report_builder import (
    build_summaries,
    convergence_rows,
    instance_rows,
    write_reports,
)
from partition_gsemo.reporting.table_formatter import TableFormatter

__all__ = [
    "TableFormatter",
    "build_summaries",
    "convergence_rows",
    "instance_rows",
    "write_reports",
]
