"""Tests for report building and table formatting."""

import pandas as pd
import pytest

from partition_gsemo.algorithms.models import RunRecord
from partition_gsemo.config.algorithm_config import AlgorithmConfig
from partition_gsemo.errors import EmptyStoreError, MissingPairsError
from partition_gsemo.instances.models import ConstraintScheme, InstanceMeta
from partition_gsemo.reporting.report_builder import (
    build_summaries,
    convergence_rows,
    instance_rows,
    setting_order,
    write_reports,
)
from partition_gsemo.reporting.table_formatter import SUMMARY_COLUMNS, TableFormatter
from partition_gsemo.storage.result_store import ResultStore

OFFSETS = [0.5, 0.5, 1.0, 1.0, 1.5, 1.5]


def synthetic_store(path, instances=6):
    """One setting (n=8, density=0.2, d1=4); GSEMO beats GREEDY by the same offsets everywhere."""
    store = ResultStore(path)
    for index in range(instances):
        instance_id = f"inst{index}"
        greedy_value = 1.0 + 0.125 * index
        store.add_instance(
            InstanceMeta(
                instance_id=instance_id,
                n=8,
                density=0.2,
                scheme=ConstraintScheme.cardinality(0.5),
                d1=4,
            )
        )
        store.add_run(
            RunRecord(
                algorithm="greedy",
                instance_id=instance_id,
                oracle_calls=12,
                best_value=greedy_value,
                trace=[(1, 0.0), (12, greedy_value)],
            )
        )
        for repeat, offset in enumerate(OFFSETS):
            store.add_run(
                RunRecord(
                    algorithm="gsemo",
                    instance_id=instance_id,
                    repeat=repeat,
                    seed=repeat,
                    iterations=10,
                    oracle_calls=11,
                    best_value=greedy_value + offset,
                    trace=[(0, 0.0), (5, greedy_value), (10, greedy_value + offset)],
                )
            )
    return store


@pytest.fixture
def store(tmp_path):
    return synthetic_store(tmp_path / "results.jsonl")


class TestSummaries:
    def test_hand_checked_row(self, store):
        (summary,) = build_summaries(store)
        row = TableFormatter().summary_row(summary)
        assert row == {
            "n": 8,
            "density": 0.2,
            "constraint": "d1=4",
            "instances": 6,
            "greedy_min": 1.0,
            "greedy_max": 1.625,
            "gsemo_min_min": 1.5,
            "gsemo_min_max": 2.125,
            "gsemo_min_verdict": "+",
            "gsemo_mean_min": 2.0,
            "gsemo_mean_max": 2.625,
            "gsemo_mean_verdict": "+",
            "gsemo_max_min": 2.5,
            "gsemo_max_max": 3.125,
            "gsemo_max_verdict": "+",
            "losses": 0,
            "wins": 6,
            "ties": 0,
        }

    def test_empty_store(self, tmp_path):
        with pytest.raises(EmptyStoreError):
            build_summaries(ResultStore(tmp_path / "empty.jsonl"))

    def test_missing_gsemo_runs(self, tmp_path):
        store = synthetic_store(tmp_path / "results.jsonl")
        store.add_instance(
            InstanceMeta(
                instance_id="lonely",
                n=8,
                density=0.2,
                scheme=ConstraintScheme.cardinality(0.5),
                d1=4,
            )
        )
        store.add_run(
            RunRecord(algorithm="greedy", instance_id="lonely", oracle_calls=1, best_value=0.0)
        )
        with pytest.raises(MissingPairsError, match="lonely"):
            build_summaries(store)

    def test_instance_rows(self, store):
        rows = instance_rows(build_summaries(store))
        assert len(rows) == 6
        assert rows[0]["instance_id"] == "inst0"
        assert rows[0]["gsemo_mean"] == 2.0
        assert {row["verdict"] for row in rows} == {"win"}

    def test_convergence(self, store):
        (row,) = convergence_rows(store)
        assert row["traced_runs"] == 36
        assert row["runs_reaching_greedy"] == 36
        assert row["median_hitting_iteration"] == 5
        assert row["max_hitting_iteration"] == 5
        assert row["greedy_oracle_calls_mean"] == 12

    def test_convergence_without_hits(self, tmp_path):
        store = ResultStore(tmp_path / "results.jsonl")
        store.add_instance(
            InstanceMeta(
                instance_id="a",
                n=8,
                density=0.2,
                scheme=ConstraintScheme.cardinality(0.5),
                d1=4,
            )
        )
        store.add_run(
            RunRecord(algorithm="greedy", instance_id="a", oracle_calls=9, best_value=2.0)
        )
        for repeat, trace in enumerate([[(0, 0.0), (10, 1.0)], None]):
            store.add_run(
                RunRecord(
                    algorithm="gsemo",
                    instance_id="a",
                    repeat=repeat,
                    seed=repeat,
                    iterations=10,
                    oracle_calls=11,
                    best_value=1.0,
                    trace=trace,
                )
            )
        (row,) = convergence_rows(store)
        assert row["greedy_oracle_calls_mean"] == 9
        assert row["traced_runs"] == 1
        assert row["runs_reaching_greedy"] == 0
        assert row["median_hitting_iteration"] is None
        assert row["max_hitting_iteration"] is None

    def test_setting_order(self):
        keys = [(8, 0.2, "k=2"), (8, 0.2, "d1=10"), (8, 0.1, "d1=4"), (8, 0.2, "d1=4")]
        assert sorted(keys, key=setting_order) == [
            (8, 0.1, "d1=4"),
            (8, 0.2, "d1=4"),
            (8, 0.2, "d1=10"),
            (8, 0.2, "k=2"),
        ]


class TestTableFormatter:
    def test_csv_columns(self, store):
        csv = TableFormatter().summary_csv(build_summaries(store))
        header, row = csv.splitlines()
        assert header.split(",") == SUMMARY_COLUMNS
        assert row.startswith("8,0.2,d1=4,6,1.0,1.625,")

    def test_markdown(self, store):
        text = TableFormatter().summary_markdown(build_summaries(store))
        lines = text.splitlines()
        assert lines[0].startswith("| n | density | constraint | GREEDY | GSEMO- |")
        assert "GSEMO*" in lines[0] and "GSEMO+" in lines[0]
        assert lines[2].count("| + |") == 3
        assert lines[2].endswith("| 0-6-0 |")
        assert "signed-rank" in text

    def test_markdown_describes_algorithms(self, store):
        text = TableFormatter().summary_markdown(build_summaries(store))
        notes = [line for line in text.splitlines() if line.startswith("- ")]
        assert [note.split(":")[0] for note in notes] == ["- GREEDY", "- GSEMO"]
        assert "flips each bit with probability 1/n" in notes[1]

    def test_markdown_without_descriptions(self, store, tmp_path):
        formatter = TableFormatter(AlgorithmConfig(tmp_path / "missing.yaml"))
        text = formatter.summary_markdown(build_summaries(store))
        assert formatter.algorithm_notes() == []
        assert text.splitlines()[-1].startswith("| 8 | 0.2 | d1=4 |")

    def test_verdict_codomain(self, store):
        frame = TableFormatter().summary_frame(build_summaries(store))
        for column in ("gsemo_min_verdict", "gsemo_mean_verdict", "gsemo_max_verdict"):
            assert set(frame[column]) <= {"+", "-", "*"}

    def test_format_record(self):
        record = RunRecord(algorithm="gsemo", oracle_calls=11, best_value=0.8, iterations=10)
        expected = "GSEMO: value=0.8, |X|=0, oracle_calls=11, T=10"
        assert TableFormatter().format_record(record) == expected


class TestWriteReports:
    def test_files_are_deterministic(self, store, tmp_path):
        first = write_reports(store, tmp_path / "r1")
        second = write_reports(ResultStore(store.path), tmp_path / "r2")
        assert sorted(first) == ["convergence.csv", "instances.csv", "summary.csv", "summary.md"]
        for name in first:
            assert first[name].read_bytes() == second[name].read_bytes()

    def test_csv_is_readable(self, store, tmp_path):
        written = write_reports(store, tmp_path / "reports")
        frame = pd.read_csv(written["instances.csv"])
        assert list(frame["verdict"]) == ["win"] * 6


class TestAlgorithmConfig:
    def test_packaged_descriptions(self):
        config = AlgorithmConfig()
        assert config.list_algorithms() == ["greedy", "gsemo"]
        assert config.get_name("gsemo") == "GSEMO"
        assert "T + 1" in config.get_description("gsemo")

    def test_missing_file(self, tmp_path):
        config = AlgorithmConfig(tmp_path / "missing.yaml")
        assert config.get_name("gsemo") == "gsemo"
        assert config.get_description("gsemo") == ""
