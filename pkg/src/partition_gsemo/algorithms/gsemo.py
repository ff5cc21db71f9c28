"""
GSEMO for constrained maximization via the bi-objective (f1, f2) formulation.

The population starts as {empty}. Each of the T iterations picks a parent
uniformly, flips every bit independently with probability 1/n, evaluates the
offspring once and offers it to the archive. The answer is the archive entry
with the largest f1 (smaller cardinality on ties).

Oracle calls: exactly T + 1 (the initial empty solution plus one per offspring).
"""

import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from partition_gsemo.algorithms.base import Solver
from partition_gsemo.algorithms.models import GsemoParams, RunRecord
from partition_gsemo.algorithms.population import Population
from partition_gsemo.algorithms.seeding import make_rng
from partition_gsemo.core.bi_objective import evaluate_bi
from partition_gsemo.core.models import OracleCounter, PartitionMatroid, Solution
from partition_gsemo.objectives.base import SetFunction

logger = logging.getLogger(__name__)

GSEMO = "gsemo"

Observer = Callable[[int, Population], None]


def mutate(x: Solution, n: int, rng: np.random.Generator) -> Solution:
    """Standard bit mutation: flip each bit independently with probability 1/n."""
    x.check_length(n)
    flips = rng.random(n) < 1.0 / n
    return Solution(x.bits ^ flips)


def gsemo(
    f: SetFunction,
    m: PartitionMatroid,
    p: GsemoParams,
    c: OracleCounter,
    trace_stride: Optional[int] = None,
    observer: Optional[Observer] = None,
) -> RunRecord:
    """
    Run GSEMO for p.iterations iterations.

    Args:
        f: Objective oracle
        m: Partition matroid constraint
        p: Iteration budget and seed
        c: Oracle-call counter for this run
        trace_stride: Record best-so-far every this many iterations (None or 0 disables)
        observer: Called as observer(t, population) after every iteration

    Returns:
        RunRecord for the best archive entry
    """
    if m.n != f.n:
        raise ValueError(f"Constraint covers {m.n} elements, objective has {f.n}")

    n = f.n
    rng = make_rng(p.seed)
    empty = Solution.empty(n)
    population = Population([(empty, evaluate_bi(f, m, empty, c))])

    trace: Optional[List[Tuple[int, float]]] = None
    if trace_stride:
        trace = [(0, population.best_value)]

    logger.debug(f"gsemo start n={n} T={p.iterations} seed={p.seed}")
    for t in range(1, p.iterations + 1):
        parent, _ = population.sample(rng)
        child = mutate(parent, n, rng)
        population = population.survival_update((child, evaluate_bi(f, m, child, c)))

        if observer is not None:
            observer(t, population)
        if trace is not None and t % trace_stride == 0:
            trace.append((t, population.best_value))

    if trace is not None and trace[-1][0] != p.iterations:
        trace.append((p.iterations, population.best_value))

    best_solution, best_value = population.best()
    logger.debug(
        f"gsemo finished: value={best_value.value}, |X|={best_solution.cardinality}, "
        f"population={len(population)}, calls={c.calls}"
    )
    return RunRecord(
        algorithm=GSEMO,
        seed=p.seed,
        iterations=p.iterations,
        oracle_calls=c.calls,
        best_value=best_value.value,
        best_solution=best_solution.indices(),
        trace=trace,
    )


class GsemoSolver(Solver):
    """Solver wrapper around gsemo() with fixed parameters."""

    def __init__(self, params: GsemoParams, trace_stride: Optional[int] = None):
        self.params = params
        self.trace_stride = trace_stride

    def get_name(self) -> str:
        return GSEMO

    def solve(
        self, f: SetFunction, m: PartitionMatroid, counter: OracleCounter
    ) -> RunRecord:
        return gsemo(f, m, self.params, counter, trace_stride=self.trace_stride)
