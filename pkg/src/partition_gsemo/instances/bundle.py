"""
Instance bundle persistence.

A bundle is a directory holding:
- graph.txt        max-cut instances (objectives.graph text format)
- objective.json   modular / coverage instances
- constraint.json  {"n", "k", "assignment", "thresholds"}
- meta.json        InstanceMeta

Writes go through a temporary file and an atomic rename.
"""

import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from partition_gsemo.core.models import PartitionMatroid
from partition_gsemo.errors import InstanceParseError, InstanceValidationError
from partition_gsemo.instances.models import InstanceMeta
from partition_gsemo.objectives.base import SetFunction
from partition_gsemo.objectives.coverage import CoverageFunction
from partition_gsemo.objectives.graph import WeightedGraph, format_graph, parse_graph
from partition_gsemo.objectives.max_cut import MaxCutFunction
from partition_gsemo.objectives.modular import ModularFunction

logger = logging.getLogger(__name__)

GRAPH_FILE = "graph.txt"
OBJECTIVE_FILE = "objective.json"
CONSTRAINT_FILE = "constraint.json"
META_FILE = "meta.json"


@dataclass(frozen=True)
class InstanceBundle:
    """Objective, constraint and metadata of one instance."""

    objective: SetFunction
    constraint: PartitionMatroid
    meta: InstanceMeta

    @property
    def graph(self) -> Optional[WeightedGraph]:
        if isinstance(self.objective, MaxCutFunction):
            return self.objective.graph
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InstanceBundle):
            return NotImplemented
        return (
            self.meta == other.meta
            and self.constraint == other.constraint
            and _objective_payload(self.objective) == _objective_payload(other.objective)
        )


def _objective_payload(objective: SetFunction) -> Any:
    if isinstance(objective, MaxCutFunction):
        return format_graph(objective.graph)
    if isinstance(objective, ModularFunction):
        return {"kind": "modular", "weights": [float(w) for w in objective.weights]}
    if isinstance(objective, CoverageFunction):
        return {
            "kind": "coverage",
            "item_weights": [float(w) for w in objective.item_weights],
            "covers": objective.covers,
        }
    raise InstanceValidationError(f"Objective {objective.get_name()} cannot be saved")


def _write_atomic(path: Path, text: str):
    temp_file = path.with_suffix(path.suffix + ".tmp")
    try:
        with open(temp_file, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(temp_file, path)
    except Exception as e:
        logger.error(f"Error writing {path}: {e}")
        if temp_file.exists():
            temp_file.unlink()
        raise


def _dump_json(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def save_bundle(bundle: InstanceBundle, directory: Path):
    """Write a bundle into directory (created if missing)."""
    directory.mkdir(parents=True, exist_ok=True)

    payload = _objective_payload(bundle.objective)
    if isinstance(payload, str):
        _write_atomic(directory / GRAPH_FILE, payload)
    else:
        _write_atomic(directory / OBJECTIVE_FILE, _dump_json(payload))

    _write_atomic(directory / CONSTRAINT_FILE, _dump_json(bundle.constraint.to_dict()))
    _write_atomic(
        directory / META_FILE,
        _dump_json(bundle.meta.model_dump(mode="json", exclude_none=True)),
    )
    logger.debug(f"Saved instance {bundle.meta.instance_id} to {directory}")


def _read_json(path: Path) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise InstanceParseError(e.msg, path=path, line=e.lineno) from e
    if not isinstance(data, dict):
        raise InstanceParseError("expected a JSON object", path=path, line=1)
    return data


def _load_objective(directory: Path, meta: InstanceMeta) -> SetFunction:
    if meta.objective == "max_cut":
        path = directory / GRAPH_FILE
        return MaxCutFunction(parse_graph(path.read_text(encoding="utf-8"), path=path))

    path = directory / OBJECTIVE_FILE
    data = _read_json(path)
    try:
        if meta.objective == "modular":
            return ModularFunction(data["weights"])
        return CoverageFunction(data["item_weights"], data["covers"])
    except KeyError as e:
        raise InstanceParseError("missing field", path=path, field=str(e.args[0])) from e
    except InstanceValidationError as e:
        raise InstanceParseError(str(e), path=path) from e


def load_bundle(directory: Path) -> InstanceBundle:
    """
    Load and validate a bundle.

    Raises:
        InstanceParseError: malformed files, with path/line/field diagnostics
        FileNotFoundError: missing files
    """
    meta_path = directory / META_FILE
    try:
        meta = InstanceMeta.model_validate(_read_json(meta_path))
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or None
        raise InstanceParseError(first["msg"], path=meta_path, field=field) from e

    objective = _load_objective(directory, meta)

    constraint_path = directory / CONSTRAINT_FILE
    try:
        constraint = PartitionMatroid.from_dict(_read_json(constraint_path))
    except InstanceParseError:
        raise
    except InstanceValidationError as e:
        raise InstanceParseError(str(e), path=constraint_path) from e

    if constraint.n != objective.n or meta.n != objective.n:
        raise InstanceParseError(
            f"sizes disagree: objective n = {objective.n}, constraint n = {constraint.n}, "
            f"meta n = {meta.n}",
            path=directory,
        )
    return InstanceBundle(objective=objective, constraint=constraint, meta=meta)
