"""
Random weighted graphs and instance construction.

Graphs have exactly floor(density * n^2) sampled pairs with weights uniform in
[0, 1]; absent pairs have weight 0. Two edge universes are supported:

- unordered: pairs {u, v} with u != v, sampled without replacement
- ordered: pairs (a, b) from V x V sampled without replacement; self-loops are
  dropped and reciprocal pairs merged by summing their weights
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from partition_gsemo.algorithms.seeding import make_rng
from partition_gsemo.core.models import PartitionMatroid
from partition_gsemo.errors import InstanceValidationError
from partition_gsemo.instances.constraints import (
    make_cardinality_constraint,
    make_partition_constraint,
)
from partition_gsemo.instances.models import EdgeUniverse, InstanceMeta, InstanceSpec, edge_count
from partition_gsemo.objectives.graph import WeightedGraph

logger = logging.getLogger(__name__)


def generate_graph(
    n: int, density: float, rng: np.random.Generator, edge_universe: EdgeUniverse = "unordered"
) -> WeightedGraph:
    """
    Sample a random weighted graph.

    Raises:
        InstanceValidationError: if floor(density * n^2) exceeds the number of pairs
    """
    m = edge_count(n, density)

    if edge_universe == "unordered":
        pairs = n * (n - 1) // 2
        if m > pairs:
            raise InstanceValidationError(
                f"Cannot sample {m} edges from {pairs} vertex pairs (n = {n}, density = {density})"
            )
        chosen = np.sort(rng.choice(pairs, size=m, replace=False))
        rows, cols = np.triu_indices(n, k=1)
        weights = rng.random(m)
        edges = [
            (int(u), int(v), float(w)) for u, v, w in zip(rows[chosen], cols[chosen], weights)
        ]
        return WeightedGraph(n, edges)

    if m > n * n:
        raise InstanceValidationError(f"Cannot sample {m} ordered pairs for n = {n}")
    chosen = np.sort(rng.choice(n * n, size=m, replace=False))
    weights = rng.random(m)
    merged: Dict[Tuple[int, int], float] = {}
    for index, w in zip(chosen, weights):
        a, b = divmod(int(index), n)
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        merged[key] = merged.get(key, 0.0) + float(w)
    edges: List[Tuple[int, int, float]] = [(u, v, w) for (u, v), w in sorted(merged.items())]
    return WeightedGraph(n, edges)


def build_constraint(spec: InstanceSpec) -> PartitionMatroid:
    if spec.scheme.kind == "cardinality":
        return make_cardinality_constraint(spec.n, spec.scheme.fraction)
    return make_partition_constraint(spec.n, spec.scheme.k, make_rng(spec.partition_seed))


def build_instance(spec: InstanceSpec) -> Tuple[WeightedGraph, PartitionMatroid, InstanceMeta]:
    """Generate the graph, constraint and metadata described by spec."""
    graph = generate_graph(spec.n, spec.density, make_rng(spec.graph_seed), spec.edge_universe)
    constraint = build_constraint(spec)

    seeds = {"graph": spec.graph_seed}
    if spec.scheme.kind == "partition":
        seeds["partition"] = spec.partition_seed

    meta = InstanceMeta(
        instance_id=spec.instance_id,
        objective="max_cut",
        n=spec.n,
        density=spec.density,
        scheme=spec.scheme,
        seeds=seeds,
        edge_universe=spec.edge_universe,
        d1=constraint.d if spec.scheme.kind == "cardinality" else None,
    )
    logger.debug(
        f"Built instance {meta.instance_id}: n={spec.n} m={graph.m} {spec.constraint_descriptor}"
    )
    return graph, constraint, meta
