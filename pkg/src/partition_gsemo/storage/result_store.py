"""
Append-only result store for experiment runs.

The store is a JSON-lines file:
- line 1: header {"kind": "header", "schema": "partition-gsemo/results", "version": 1}
- {"kind": "instance", ...InstanceMeta} once per instance
- {"kind": "run", ...RunRecord} once per (instance_id, algorithm, repeat)

Design features:
- Appends are flushed and fsync'ed one line at a time, so an interrupted run
  loses at most the line being written; a truncated last line is dropped on load
- Re-adding an existing key is a no-op (a differing duplicate is logged)
- compact() rewrites the file sorted by key with an atomic rename, making the
  content independent of completion order
"""

import json
import logging
import os
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import ValidationError

from partition_gsemo.algorithms.models import RunRecord
from partition_gsemo.errors import InstanceParseError
from partition_gsemo.instances.models import InstanceMeta

logger = logging.getLogger(__name__)

SCHEMA = "partition-gsemo/results"
SCHEMA_VERSION = 1

RecordKey = Tuple[str, str, int]


def _dump_line(data: Dict) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


class ResultStore:
    """
    Manages the JSON-lines record log of an experiment.

    Writes are expected from a single process; workers hand their records to
    the orchestrator, which appends them.
    """

    def __init__(self, path: Path):
        """
        Initialize the store, creating the file with its header if missing.

        Args:
            path: Location of the .jsonl file
        """
        self.path = path
        self._runs: Dict[RecordKey, RunRecord] = {}
        self._instances: Dict[str, InstanceMeta] = {}
        self._ensure_store_exists()
        self._load()

    @property
    def header(self) -> Dict:
        return {"kind": "header", "schema": SCHEMA, "version": SCHEMA_VERSION}

    def _ensure_store_exists(self):
        if not self.path.exists():
            logger.info(f"Creating new result store: {self.path}")
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._write_all([self.header])

    def _load(self):
        with open(self.path, "r", encoding="utf-8") as f:
            lines = f.readlines()

        if not lines:
            raise InstanceParseError("store has no header line", path=self.path, line=1)

        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as e:
            raise InstanceParseError(f"invalid header: {e.msg}", path=self.path, line=1) from e
        if header.get("schema") != SCHEMA or header.get("version") != SCHEMA_VERSION:
            raise InstanceParseError(
                f"unsupported store schema {header.get('schema')!r} v{header.get('version')}",
                path=self.path,
                line=1,
            )

        for number, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as e:
                if number == len(lines) and not line.endswith("\n"):
                    logger.warning(f"Dropping truncated last line {number} of {self.path}")
                    intact = sum(len(text.encode("utf-8")) for text in lines[:-1])
                    os.truncate(self.path, intact)
                    continue
                raise InstanceParseError(e.msg, path=self.path, line=number) from e

            kind = data.pop("kind", None)
            try:
                if kind == "run":
                    record = RunRecord.model_validate(data)
                    self._runs[record.key] = record
                elif kind == "instance":
                    meta = InstanceMeta.model_validate(data)
                    self._instances[meta.instance_id] = meta
                else:
                    raise InstanceParseError(
                        f"unknown record kind {kind!r}", path=self.path, line=number
                    )
            except ValidationError as e:
                first = e.errors()[0]
                field = ".".join(str(part) for part in first["loc"]) or None
                raise InstanceParseError(
                    first["msg"], path=self.path, line=number, field=field
                ) from e

        logger.debug(
            f"Loaded {len(self._runs)} runs and {len(self._instances)} instances from {self.path}"
        )

    def _append_line(self, data: Dict):
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(_dump_line(data))
            f.flush()
            os.fsync(f.fileno())

    def _write_all(self, rows: Iterable[Dict]):
        """
        Rewrite the whole file atomically.

        Process:
        1. Write to temporary file
        2. Rename to actual file (atomic operation)
        """
        temp_file = self.path.with_suffix(".tmp")
        try:
            with open(temp_file, "w", encoding="utf-8") as f:
                for row in rows:
                    f.write(_dump_line(row))
            os.replace(temp_file, self.path)
        except Exception as e:
            logger.error(f"Error saving result store: {e}")
            if temp_file.exists():
                temp_file.unlink()
            raise

    def has_run(self, key: RecordKey) -> bool:
        return key in self._runs

    def add_run(self, record: RunRecord) -> bool:
        """
        Append a run unless its key is already stored.

        Returns:
            True if the record was written
        """
        existing = self._runs.get(record.key)
        if existing is not None:
            if existing != record:
                logger.warning(
                    f"Stored run {record.key} differs from the recomputed one; keeping stored"
                )
            return False
        self._append_line({"kind": "run", **record.model_dump(mode="json")})
        self._runs[record.key] = record
        return True

    def add_instance(self, meta: InstanceMeta) -> bool:
        """Record instance metadata once; returns True if written."""
        if meta.instance_id in self._instances:
            return False
        self._append_line({"kind": "instance", **meta.model_dump(mode="json", exclude_none=True)})
        self._instances[meta.instance_id] = meta
        return True

    def runs(self, algorithm: Optional[str] = None) -> List[RunRecord]:
        """Stored runs sorted by key, optionally filtered by algorithm."""
        records = [self._runs[key] for key in sorted(self._runs)]
        if algorithm is not None:
            records = [record for record in records if record.algorithm == algorithm]
        return records

    def instances(self) -> Dict[str, InstanceMeta]:
        return {key: self._instances[key] for key in sorted(self._instances)}

    def __len__(self) -> int:
        return len(self._runs)

    def compact(self):
        """Rewrite the store sorted by key (header, instances, runs)."""
        rows: List[Dict] = [self.header]
        rows.extend(
            {"kind": "instance", **meta.model_dump(mode="json", exclude_none=True)}
            for meta in self.instances().values()
        )
        rows.extend({"kind": "run", **record.model_dump(mode="json")} for record in self.runs())
        self._write_all(rows)
        logger.info(f"Compacted result store {self.path} ({len(self._runs)} runs)")
