"""Tests for the JSON-lines result store."""

import json

import pytest

from partition_gsemo.algorithms.models import RunRecord
from partition_gsemo.errors import InstanceParseError
from partition_gsemo.instances.models import ConstraintScheme, InstanceMeta
from partition_gsemo.storage.result_store import SCHEMA, SCHEMA_VERSION, ResultStore


def record(instance_id="a", algorithm="gsemo", repeat=0, value=1.0):
    return RunRecord(
        algorithm=algorithm,
        instance_id=instance_id,
        repeat=repeat,
        seed=repeat,
        iterations=10,
        oracle_calls=11,
        best_value=value,
        best_solution=[0, 2],
        trace=[(0, 0.0), (10, value)],
    )


def meta(instance_id="a"):
    return InstanceMeta(
        instance_id=instance_id,
        n=8,
        density=0.2,
        scheme=ConstraintScheme.cardinality(0.5),
        seeds={"graph": 1},
        d1=4,
    )


@pytest.fixture
def store_path(tmp_path):
    return tmp_path / "results.jsonl"


def test_new_store_has_header(store_path):
    ResultStore(store_path)
    header = json.loads(store_path.read_text().splitlines()[0])
    assert header == {"kind": "header", "schema": SCHEMA, "version": SCHEMA_VERSION}


def test_records_survive_reload(store_path):
    store = ResultStore(store_path)
    assert store.add_instance(meta())
    assert store.add_run(record())
    assert store.add_run(record(algorithm="greedy"))

    reloaded = ResultStore(store_path)
    assert len(reloaded) == 2
    assert reloaded.runs("gsemo") == [record()]
    assert reloaded.instances() == {"a": meta()}


def test_duplicate_key_is_skipped(store_path):
    store = ResultStore(store_path)
    store.add_run(record(value=1.0))
    lines = store_path.read_text().count("\n")

    assert not store.add_run(record(value=1.0))
    assert not store.add_run(record(value=2.0))
    assert store_path.read_text().count("\n") == lines
    assert store.runs()[0].best_value == 1.0
    assert store.has_run(("a", "gsemo", 0))


def test_truncated_last_line_is_dropped(store_path):
    store = ResultStore(store_path)
    store.add_run(record())
    with open(store_path, "a", encoding="utf-8") as f:
        f.write('{"kind": "run", "algorithm": "gs')

    resumed = ResultStore(store_path)
    assert len(resumed) == 1
    resumed.add_run(record(repeat=1))
    assert len(ResultStore(store_path)) == 2


def test_corrupt_middle_line_is_refused(store_path):
    store = ResultStore(store_path)
    store.add_run(record())
    with open(store_path, "a", encoding="utf-8") as f:
        f.write("not json\n")
    with pytest.raises(InstanceParseError) as excinfo:
        ResultStore(store_path)
    assert excinfo.value.line == 3


def test_unknown_schema(store_path):
    store_path.write_text('{"kind": "header", "schema": "other", "version": 1}\n')
    with pytest.raises(InstanceParseError, match="unsupported store schema"):
        ResultStore(store_path)


def test_invalid_record_reports_field(store_path):
    ResultStore(store_path)
    with open(store_path, "a", encoding="utf-8") as f:
        f.write(json.dumps({"kind": "run", "algorithm": "gsemo", "best_value": 1.0}) + "\n")
    with pytest.raises(InstanceParseError) as excinfo:
        ResultStore(store_path)
    assert excinfo.value.field == "oracle_calls"


def test_compaction_is_order_independent(tmp_path):
    records = [record(i, alg, r) for i in ("b", "a") for alg in ("gsemo", "greedy") for r in (1, 0)]

    first = ResultStore(tmp_path / "first.jsonl")
    second = ResultStore(tmp_path / "second.jsonl")
    for item in records:
        first.add_run(item)
    for item in reversed(records):
        second.add_run(item)
    for store in (first, second):
        store.add_instance(meta("b"))
        store.add_instance(meta("a"))
        store.compact()

    assert (tmp_path / "first.jsonl").read_bytes() == (tmp_path / "second.jsonl").read_bytes()
    assert [r.key for r in ResultStore(tmp_path / "first.jsonl").runs()] == sorted(
        item.key for item in records
    )
    assert not (tmp_path / "first.tmp").exists()
