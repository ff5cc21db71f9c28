"""
Default experimental grid for the max-cut comparison.

- n in {50, 100, 200}
- density in {0.01, 0.02, 0.05, 0.1, 0.2}
- cardinality constraints with d1 = n/4, n/2, 3n/4 (rounded half-up)
- partition constraints with k in {2, 5, 10}, every d_i = ceil(n / 2k)
- 30 graphs per (n, density), 30 GSEMO runs per instance, T = 4 n^2
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class GridDefaults:
    """The protocol's parameter grid."""

    n_values: tuple = (50, 100, 200)
    densities: tuple = (0.01, 0.02, 0.05, 0.1, 0.2)
    cardinality_fractions: tuple = (0.25, 0.5, 0.75)
    partition_ks: tuple = (2, 5, 10)
    graphs_per_setting: int = 30
    repeats: int = 30
    t_multiplier: int = 4


PROTOCOL = GridDefaults()


def instance_count(grid: GridDefaults = PROTOCOL) -> int:
    """Instances generated for the whole grid (both constraint families)."""
    graphs = len(grid.n_values) * len(grid.densities) * grid.graphs_per_setting
    return graphs * (len(grid.cardinality_fractions) + len(grid.partition_ks))
