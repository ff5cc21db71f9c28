"""Random instance helpers for tests."""

import numpy as np

from partition_gsemo.core.models import PartitionMatroid
from partition_gsemo.objectives.graph import WeightedGraph


def random_graph(n: int, m: int, rng: np.random.Generator) -> WeightedGraph:
    """Graph with m distinct random pairs and uniform weights."""
    rows, cols = np.triu_indices(n, k=1)
    chosen = np.sort(rng.choice(rows.shape[0], size=m, replace=False))
    weights = rng.random(m)
    return WeightedGraph(
        n, [(int(rows[i]), int(cols[i]), float(w)) for i, w in zip(chosen, weights)]
    )


def random_partition(n: int, k: int, rng: np.random.Generator) -> PartitionMatroid:
    """Random (not necessarily balanced) partition matroid with k non-empty blocks."""
    assignment = np.concatenate([np.arange(k), rng.integers(0, k, size=n - k)])
    rng.shuffle(assignment)
    sizes = np.bincount(assignment, minlength=k)
    thresholds = [int(rng.integers(1, size + 1)) for size in sizes]
    return PartitionMatroid(assignment=tuple(assignment.tolist()), thresholds=tuple(thresholds))
