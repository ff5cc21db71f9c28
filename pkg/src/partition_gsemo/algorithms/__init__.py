"""Solvers: deterministic GREEDY and GSEMO."""

from partition_gsemo.algorithms.base import Solver
from partition_gsemo.algorithms.greedy import GREEDY, GreedySolver, greedy
from partition_gsemo.algorithms.gsemo import GSEMO, GsemoSolver, gsemo, mutate
from partition_gsemo.algorithms.models import GsemoParams, RunRecord
from partition_gsemo.algorithms.population import Population, survival_update
from partition_gsemo.algorithms.registry import ALGORITHMS, make_solver
from partition_gsemo.algorithms.seeding import derive_seed, make_rng, stable_key

__all__ = [
    "ALGORITHMS",
    "GREEDY",
    "GSEMO",
    "GreedySolver",
    "GsemoParams",
    "GsemoSolver",
    "Population",
    "RunRecord",
    "Solver",
    "derive_seed",
    "greedy",
    "gsemo",
    "make_rng",
    "make_solver",
    "mutate",
    "stable_key",
    "survival_update",
]
