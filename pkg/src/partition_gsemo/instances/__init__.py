"""Instance generation and bundle persistence for the max-cut experiments."""

from partition_gsemo.instances.bundle import InstanceBundle, load_bundle, save_bundle
from partition_gsemo.instances.constraints import (
    make_cardinality_constraint,
    make_partition_constraint,
)
from partition_gsemo.instances.generator import build_instance, generate_graph
from partition_gsemo.instances.models import (
    ConstraintScheme,
    InstanceMeta,
    InstanceSpec,
    edge_count,
)

__all__ = [
    "ConstraintScheme",
    "InstanceBundle",
    "InstanceMeta",
    "InstanceSpec",
    "build_instance",
    "edge_count",
    "generate_graph",
    "load_bundle",
    "make_cardinality_constraint",
    "make_partition_constraint",
    "save_bundle",
]
