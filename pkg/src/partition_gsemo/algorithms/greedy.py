"""
Deterministic GREEDY under partition matroid constraints.

Starting from the empty set, each step evaluates every remaining element whose
block still has room and adds the one with the largest marginal gain (lowest
index on ties). The run stops as soon as the best gain is not strictly positive.

Oracle calls: one for f(empty) plus one per candidate per step, at most
1 + sum_{j=1..d} (n - j + 1).
"""

import logging
from typing import List, Optional, Tuple

from partition_gsemo.algorithms.base import Solver
from partition_gsemo.algorithms.models import RunRecord
from partition_gsemo.core.models import OracleCounter, PartitionMatroid, Solution
from partition_gsemo.objectives.base import SetFunction, marginal_gain

logger = logging.getLogger(__name__)

GREEDY = "greedy"


def greedy(f: SetFunction, m: PartitionMatroid, c: OracleCounter) -> RunRecord:
    """
    Run GREEDY once.

    The trace records (oracle calls so far, f(current solution)) after the
    initial evaluation and after every addition.
    """
    if m.n != f.n:
        raise ValueError(f"Constraint covers {m.n} elements, objective has {f.n}")

    n = f.n
    current = Solution.empty(n)
    value = f.query(current, c)
    counts = [0] * m.k
    trace: List[Tuple[int, float]] = [(c.calls, value)]

    while True:
        best_element: Optional[int] = None
        best_gain = 0.0

        for v in range(n):
            if v in current:
                continue
            block = m.block_of(v)
            if counts[block] >= m.thresholds[block]:
                continue

            # f(current) is cached, so each candidate costs one call
            gain = marginal_gain(f, current, v, c, base_value=value)
            if best_element is None or gain > best_gain:
                best_element, best_gain = v, gain

        if best_element is None or not best_gain > 0:
            break

        current = current.with_element(best_element)
        counts[m.block_of(best_element)] += 1
        # charged when the candidate was queried
        value = f(current)
        trace.append((c.calls, value))
        logger.debug(f"greedy added {best_element} (gain {best_gain:.6g}), value {value:.6g}")

    logger.debug(f"greedy finished with |X|={current.cardinality}, value={value}, calls={c.calls}")
    return RunRecord(
        algorithm=GREEDY,
        oracle_calls=c.calls,
        best_value=value,
        best_solution=current.indices(),
        trace=trace,
    )


class GreedySolver(Solver):
    """Solver wrapper around greedy()."""

    def get_name(self) -> str:
        return GREEDY

    def solve(
        self, f: SetFunction, m: PartitionMatroid, counter: OracleCounter
    ) -> RunRecord:
        return greedy(f, m, counter)
