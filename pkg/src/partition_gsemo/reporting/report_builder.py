"""
Report building from a result store.

Reports are a pure function of the store: settings, instances and runs are
always processed in sorted order, so rerunning a report gives byte-identical files.

Files written into the reports directory:
- summary.csv       one row per setting (GREEDY range, GSEMO-/*/+ ranges, verdicts, L-W-T)
- summary.md        the same rows as a Markdown table
- instances.csv     per-instance GREEDY value, GSEMO statistics and verdict
- convergence.csv   per-setting first iteration at which GSEMO reaches GREEDY's value
"""

import logging
import os
from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from partition_gsemo.algorithms.greedy import GREEDY
from partition_gsemo.algorithms.gsemo import GSEMO
from partition_gsemo.errors import EmptyStoreError
from partition_gsemo.instances.models import InstanceMeta
from partition_gsemo.reporting.table_formatter import TableFormatter
from partition_gsemo.stats.models import SettingSummary
from partition_gsemo.stats.verdicts import ALPHA, first_hitting_iteration, setting_verdicts
from partition_gsemo.storage.result_store import ResultStore

logger = logging.getLogger(__name__)

SettingKey = Tuple[int, Optional[float], str]


def setting_order(key: SettingKey) -> tuple:
    """Sort key: n, density, then constraint family and its numeric parameter."""
    n, density, label = key
    family, _, parameter = label.partition("=")
    return (n, -1.0 if density is None else density, family, int(parameter) if parameter else 0)


def _group_instances(store: ResultStore) -> Dict[SettingKey, List[InstanceMeta]]:
    groups: Dict[SettingKey, List[InstanceMeta]] = defaultdict(list)
    for meta in store.instances().values():
        groups[meta.setting_key].append(meta)
    return {key: groups[key] for key in sorted(groups, key=setting_order)}


def _runs_by_instance(store: ResultStore):
    greedy_values: Dict[str, float] = {}
    greedy_calls: Dict[str, int] = {}
    gsemo_runs = defaultdict(list)
    known = store.instances()

    for record in store.runs():
        if record.instance_id not in known:
            logger.warning(f"Run {record.key} has no instance metadata; skipped")
            continue
        if record.algorithm == GREEDY:
            greedy_values[record.instance_id] = record.best_value
            greedy_calls[record.instance_id] = record.oracle_calls
        elif record.algorithm == GSEMO:
            gsemo_runs[record.instance_id].append(record)
        else:
            logger.warning(f"Unknown algorithm {record.algorithm!r} in store; skipped")
    return greedy_values, greedy_calls, gsemo_runs


def build_summaries(store: ResultStore, alpha: float = ALPHA) -> List[SettingSummary]:
    """
    Summarise every setting in the store.

    Raises:
        EmptyStoreError: if the store holds no runs
        MissingPairsError: if an instance lacks GREEDY or GSEMO runs
    """
    if len(store) == 0:
        raise EmptyStoreError(f"Result store {store.path} contains no runs")

    greedy_values, _, gsemo_runs = _runs_by_instance(store)
    summaries = []
    for (n, density, label), metas in _group_instances(store).items():
        ids = [meta.instance_id for meta in metas]
        if not any(key in greedy_values or key in gsemo_runs for key in ids):
            continue
        summaries.append(
            setting_verdicts(
                greedy_values={key: greedy_values[key] for key in ids if key in greedy_values},
                gsemo_values={
                    key: [record.best_value for record in gsemo_runs[key]]
                    for key in ids
                    if key in gsemo_runs
                },
                n=n,
                constraint=label,
                density=density,
                alpha=alpha,
            )
        )

    if not summaries:
        raise EmptyStoreError(f"Result store {store.path} has no runs for known instances")
    logger.info(f"Built {len(summaries)} setting summaries")
    return summaries


def instance_rows(summaries: List[SettingSummary]) -> List[Dict]:
    """Per-instance rows: GREEDY value, GSEMO-/*/+ and the L/W/T verdict."""
    rows = []
    for summary in summaries:
        for instance_id in sorted(summary.greedy_values):
            low, mean, high = summary.gsemo_stats[instance_id]
            rows.append(
                {
                    "n": summary.n,
                    "density": summary.density,
                    "constraint": summary.constraint,
                    "instance_id": instance_id,
                    "greedy": summary.greedy_values[instance_id],
                    "gsemo_min": low,
                    "gsemo_mean": mean,
                    "gsemo_max": high,
                    "verdict": summary.instance_verdicts[instance_id].value,
                }
            )
    return rows


def convergence_rows(store: ResultStore) -> List[Dict]:
    """
    Per-setting convergence of GSEMO relative to GREEDY.

    A GSEMO run reaches GREEDY when its best-so-far trace first attains the
    GREEDY value of the same instance; runs without a trace are not counted.
    """
    greedy_values, greedy_calls, gsemo_runs = _runs_by_instance(store)
    groups = _group_instances(store)
    settings = list(groups)
    calls: List[Dict] = []
    hits: List[Dict] = []
    for index, key in enumerate(settings):
        for meta in groups[key]:
            target = greedy_values.get(meta.instance_id)
            if target is None:
                continue
            calls.append({"setting": index, "calls": greedy_calls[meta.instance_id]})
            for record in gsemo_runs.get(meta.instance_id, []):
                if record.trace is None:
                    continue
                hit = first_hitting_iteration(record.trace, target)
                hits.append({"setting": index, "hit": np.nan if hit is None else float(hit)})

    call_means = (
        pd.DataFrame(calls, columns=["setting", "calls"])
        .astype({"setting": int, "calls": float})
        .groupby("setting")["calls"]
        .mean()
    )
    # size counts traced runs, count only the ones that reached GREEDY
    hit_stats = (
        pd.DataFrame(hits, columns=["setting", "hit"])
        .astype({"setting": int, "hit": float})
        .groupby("setting")["hit"]
        .agg(["size", "count", "median", "max"])
    )

    rows = []
    for index, call_mean in call_means.items():
        n, density, label = settings[index]
        traced, reached, median, maximum = 0, 0, None, None
        if index in hit_stats.index:
            summary = hit_stats.loc[index]
            traced, reached = int(summary["size"]), int(summary["count"])
            if reached:
                median, maximum = float(summary["median"]), int(summary["max"])
        rows.append(
            {
                "n": n,
                "density": density,
                "constraint": label,
                "greedy_oracle_calls_mean": float(call_mean),
                "traced_runs": traced,
                "runs_reaching_greedy": reached,
                "median_hitting_iteration": median,
                "max_hitting_iteration": maximum,
            }
        )
    return rows


def _write_atomic(path: Path, text: str):
    temp_file = path.with_suffix(path.suffix + ".tmp")
    try:
        with open(temp_file, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(temp_file, path)
    except Exception as e:
        logger.error(f"Error writing report {path}: {e}")
        if temp_file.exists():
            temp_file.unlink()
        raise


def write_reports(
    store: ResultStore,
    reports_dir: Path,
    alpha: float = ALPHA,
    formatter: Optional[TableFormatter] = None,
) -> Dict[str, Path]:
    """
    Write summary.csv, summary.md, instances.csv and convergence.csv.

    Returns:
        Mapping of report name to written path
    """
    formatter = formatter or TableFormatter()
    summaries = build_summaries(store, alpha)
    reports_dir.mkdir(parents=True, exist_ok=True)

    outputs = {
        "summary.csv": formatter.summary_csv(summaries),
        "summary.md": formatter.summary_markdown(summaries),
        "instances.csv": formatter.rows_csv(instance_rows(summaries)),
        "convergence.csv": formatter.rows_csv(convergence_rows(store)),
    }
    written = {}
    for name, text in outputs.items():
        path = reports_dir / name
        _write_atomic(path, text)
        written[name] = path
        logger.info(f"Wrote {path}")
    return written
