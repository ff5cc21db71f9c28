"""
Data models describing generated instances.

- ConstraintScheme: cardinality (fraction of n) or balanced partition (k blocks)
- InstanceSpec: everything needed to regenerate one instance
- InstanceMeta: the meta.json record stored next to an instance
"""

import hashlib
import json
from decimal import ROUND_FLOOR, Decimal
from typing import Dict, Literal, Optional

from pydantic import BaseModel, Field, model_validator

EdgeUniverse = Literal["unordered", "ordered"]


def edge_count(n: int, density: float) -> int:
    """floor(density * n^2), computed on the decimal literal of density."""
    exact = Decimal(repr(float(density))) * n * n
    return int(exact.to_integral_value(rounding=ROUND_FLOOR))


class ConstraintScheme(BaseModel):
    """Constraint family of an instance."""

    kind: Literal["cardinality", "partition"]
    fraction: Optional[float] = Field(default=None, gt=0, le=1)
    k: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_parameters(self):
        if self.kind == "cardinality" and (self.fraction is None or self.k is not None):
            raise ValueError("cardinality schemes need 'fraction' and no 'k'")
        if self.kind == "partition" and (self.k is None or self.fraction is not None):
            raise ValueError("partition schemes need 'k' and no 'fraction'")
        return self

    @classmethod
    def cardinality(cls, fraction: float) -> "ConstraintScheme":
        return cls(kind="cardinality", fraction=fraction)

    @classmethod
    def partition(cls, k: int) -> "ConstraintScheme":
        return cls(kind="partition", k=k)

    @property
    def descriptor(self) -> str:
        if self.kind == "cardinality":
            return f"cardinality:{self.fraction!r}"
        return f"partition:{self.k}"


class InstanceSpec(BaseModel):
    """Parameters of one generated max-cut instance."""

    n: int = Field(ge=2)
    density: float = Field(gt=0, le=0.5)
    scheme: ConstraintScheme
    graph_seed: int = Field(ge=0)
    partition_seed: int = Field(default=0, ge=0)
    edge_universe: EdgeUniverse = "unordered"

    @model_validator(mode="after")
    def _check_sampleable(self):
        m = edge_count(self.n, self.density)
        limit = self.n * (self.n - 1) // 2 if self.edge_universe == "unordered" else self.n**2
        if m > limit:
            raise ValueError(
                f"density {self.density} needs {m} edges "
                f"but only {limit} pairs exist for n = {self.n}"
            )
        return self

    @property
    def constraint_descriptor(self) -> str:
        if self.scheme.kind == "partition":
            return f"{self.scheme.descriptor}:seed={self.partition_seed}"
        return self.scheme.descriptor

    @property
    def instance_id(self) -> str:
        """Hash of (n, density, graph seed, constraint descriptor, edge universe)."""
        payload = json.dumps(
            {
                "n": self.n,
                "density": repr(self.density),
                "graph_seed": self.graph_seed,
                "constraint": self.constraint_descriptor,
                "edge_universe": self.edge_universe,
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


class InstanceMeta(BaseModel):
    """Contents of meta.json."""

    instance_id: str
    objective: Literal["max_cut", "modular", "coverage"] = "max_cut"
    n: int = Field(ge=1)
    density: Optional[float] = None
    scheme: Optional[ConstraintScheme] = None
    seeds: Dict[str, int] = Field(default_factory=dict)
    edge_universe: EdgeUniverse = "unordered"
    d1: Optional[int] = Field(default=None, description="Threshold of cardinality instances")

    @property
    def setting_key(self) -> tuple:
        """(n, density, constraint label) used to group instances in reports."""
        if self.scheme is None:
            return (self.n, self.density, "custom")
        if self.scheme.kind == "cardinality":
            return (self.n, self.density, f"d1={self.d1}")
        return (self.n, self.density, f"k={self.scheme.k}")
