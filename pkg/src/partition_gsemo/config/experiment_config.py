"""
Experiment configuration.

ExperimentConfig is read from JSON (or YAML for .yaml/.yml files) and every
field can be overridden from the command line. Defaults reproduce the
protocol grid in config.protocol.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from partition_gsemo.algorithms.seeding import MAX_SEED
from partition_gsemo.config.protocol import PROTOCOL
from partition_gsemo.config.settings import settings
from partition_gsemo.core.models import PartitionMatroid
from partition_gsemo.errors import InstanceValidationError
from partition_gsemo.instances.models import EdgeUniverse

logger = logging.getLogger(__name__)

TPolicy = Union[Literal["quadratic", "expected_runtime"], int]


class ExperimentConfig(BaseModel):
    """
    Parameters of a full generate / run / report pipeline.

    t_policy:
        "quadratic"  T = t_multiplier * n^2 (default, 4 n^2)
        "expected_runtime"  T = ceil(e * dbar * n * (d + 1)) per instance
        integer      fixed T for every instance
    trace_stride:
        None records best-so-far every n iterations, 0 disables traces.
    """

    master_seed: int = Field(default=0, ge=0, le=MAX_SEED)
    n_values: List[int] = Field(default_factory=lambda: list(PROTOCOL.n_values))
    densities: List[float] = Field(default_factory=lambda: list(PROTOCOL.densities))
    cardinality_fractions: List[float] = Field(
        default_factory=lambda: list(PROTOCOL.cardinality_fractions)
    )
    partition_ks: List[int] = Field(default_factory=lambda: list(PROTOCOL.partition_ks))
    graphs_per_setting: int = Field(default=PROTOCOL.graphs_per_setting, ge=1)
    repeats: int = Field(default=PROTOCOL.repeats, ge=1)
    t_policy: TPolicy = "quadratic"
    t_multiplier: int = Field(default=PROTOCOL.t_multiplier, ge=0)
    parallelism: int = Field(default=1, ge=1)
    output_dir: Optional[Path] = None
    trace_stride: Optional[int] = Field(default=None, ge=0)
    edge_universe: EdgeUniverse = "unordered"

    @field_validator("n_values")
    @classmethod
    def _check_n_values(cls, values: List[int]) -> List[int]:
        if not values or any(n < 2 for n in values):
            raise ValueError("n_values needs at least one entry, each >= 2")
        return values

    @field_validator("densities")
    @classmethod
    def _check_densities(cls, values: List[float]) -> List[float]:
        if not values or any(not 0 < density <= 0.5 for density in values):
            raise ValueError("densities needs at least one entry, each in (0, 0.5]")
        return values

    @field_validator("cardinality_fractions")
    @classmethod
    def _check_fractions(cls, values: List[float]) -> List[float]:
        if any(not 0 < fraction <= 1 for fraction in values):
            raise ValueError("cardinality fractions must lie in (0, 1]")
        return values

    @field_validator("t_policy")
    @classmethod
    def _check_t_policy(cls, value: TPolicy) -> TPolicy:
        if isinstance(value, int) and value < 0:
            raise ValueError("a fixed T must be non-negative")
        return value

    @model_validator(mode="after")
    def _check_grid(self):
        if not self.cardinality_fractions and not self.partition_ks:
            raise ValueError("at least one constraint scheme is required")
        for k in self.partition_ks:
            for n in self.n_values:
                if k < 1 or n % k != 0:
                    raise ValueError(f"partition k = {k} must divide every n (n = {n})")
        return self

    @property
    def resolved_output_dir(self) -> Path:
        return self.output_dir if self.output_dir is not None else settings.output_dir

    @property
    def instances_dir(self) -> Path:
        return self.resolved_output_dir / "instances"

    @property
    def store_path(self) -> Path:
        return self.resolved_output_dir / "results.jsonl"

    @property
    def reports_dir(self) -> Path:
        return self.resolved_output_dir / "reports"

    def iterations_for(self, m: PartitionMatroid) -> int:
        """GSEMO budget T for an instance under the configured policy."""
        if isinstance(self.t_policy, int):
            return self.t_policy
        if self.t_policy == "expected_runtime":
            return math.ceil(math.e * m.dbar * m.n * (m.d + 1))
        return self.t_multiplier * m.n * m.n

    def stride_for(self, n: int) -> Optional[int]:
        """Trace stride for a ground set of size n (None when disabled)."""
        if self.trace_stride is None:
            return n
        return self.trace_stride or None

    @classmethod
    def from_file(
        cls, path: Path, overrides: Optional[Dict[str, Any]] = None
    ) -> "ExperimentConfig":
        """
        Load from JSON or YAML, then apply non-None overrides.

        Raises:
            InstanceValidationError: unreadable or invalid configuration
        """
        try:
            text = path.read_text(encoding="utf-8")
            if path.suffix.lower() in (".yaml", ".yml"):
                data = yaml.safe_load(text) or {}
            else:
                data = json.loads(text)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise InstanceValidationError(f"Cannot parse config {path}: {e}") from e
        if not isinstance(data, dict):
            raise InstanceValidationError(f"Config {path} must contain an object")

        logger.info(f"Loaded experiment config from {path}")
        return cls.build(data, overrides)

    @classmethod
    def build(
        cls, data: Optional[Dict[str, Any]] = None, overrides: Optional[Dict[str, Any]] = None
    ) -> "ExperimentConfig":
        merged = dict(data or {})
        merged.update({key: value for key, value in (overrides or {}).items() if value is not None})
        return cls.model_validate(merged)
