"""
Bi-objective reformulation of constrained maximization.

A solution X is mapped to (f1, f2) where f1 = f(X) if X satisfies every block
threshold and -infinity otherwise, and f2 = -|X|. Both objectives are maximized.
"""

from typing import TYPE_CHECKING

import numpy as np

from partition_gsemo.core.models import (
    NEGATIVE_INFINITY,
    BiValue,
    Dominance,
    OracleCounter,
    PartitionMatroid,
    Solution,
)

if TYPE_CHECKING:
    from partition_gsemo.objectives.base import SetFunction


def is_feasible(m: PartitionMatroid, x: Solution) -> bool:
    """
    Check the partition matroid constraints |X ∩ B_i| <= d_i.

    Raises:
        LengthMismatchError: if x does not have length m.n
    """
    return bool(np.all(m.block_counts(x) <= m.thresholds_array))


def evaluate_bi(
    f: "SetFunction", m: PartitionMatroid, x: Solution, c: OracleCounter
) -> BiValue:
    """
    Evaluate the objective pair of x, charging exactly one oracle call.

    Infeasible solutions are charged like feasible ones but f is not computed
    for them; their f1 is NEGATIVE_INFINITY.

    Raises:
        NegativeOracleValueError: if f(x) < 0
        LengthMismatchError: if x does not match the instance size
    """
    x.check_length(f.n)
    if not is_feasible(m, x):
        c.charge()
        return BiValue(f1=NEGATIVE_INFINITY, f2=-x.cardinality)

    return BiValue(f1=f.query(x, c), f2=-x.cardinality)


def dominance(a: BiValue, b: BiValue) -> Dominance:
    """
    Compare a against b.

    WEAKLY_DOMINATES when a is no worse in both objectives, STRICTLY_DOMINATES
    when it is additionally better in at least one, NONE otherwise.
    """
    if not (a.f1_at_least(b) and a.f2 >= b.f2):
        return Dominance.NONE
    if a.f1_greater(b) or a.f2 > b.f2:
        return Dominance.STRICTLY_DOMINATES
    return Dominance.WEAKLY_DOMINATES
