"""
Desk-scale verification of one instance against the approximation guarantees.

Computes OPT, eps_{d+dbar} and (for monotone objectives) gamma_{dbar,d} by brute
force, evaluates both bounds, runs GREEDY and GSEMO, and reports whether the
solver outputs meet the bounds.
"""

import logging
import math
from typing import Optional

from partition_gsemo.algorithms.greedy import greedy
from partition_gsemo.algorithms.gsemo import gsemo
from partition_gsemo.algorithms.models import GsemoParams
from partition_gsemo.algorithms.seeding import derive_seed
from partition_gsemo.analysis.bounds import (
    BoundReport,
    expected_runtime_bound,
    theorem1_bound,
    theorem2_bound,
)
from partition_gsemo.analysis.brute_force import brute_force_opt
from partition_gsemo.analysis.definitions import (
    MAX_EPSILON_N,
    MAX_GAMMA_N,
    MAX_SUBMODULAR_N,
    TOLERANCE,
    check_submodular,
    epsilon_j,
    gamma_ij,
    is_monotone,
)
from partition_gsemo.analysis.enumeration import guard
from partition_gsemo.core.models import OracleCounter, PartitionMatroid
from partition_gsemo.objectives.base import SetFunction

logger = logging.getLogger(__name__)

MAX_VERIFY_N = MAX_EPSILON_N
RUNTIME_BUDGET_FACTOR = 10


def default_verify_iterations(n: int, d: int, dbar: int) -> int:
    """Ten times the expected run-time bound, rounded up."""
    return RUNTIME_BUDGET_FACTOR * math.ceil(expected_runtime_bound(n, d, dbar))


def verify_instance(
    f: SetFunction,
    m: PartitionMatroid,
    gsemo_iterations: Optional[int] = None,
    seed: int = 0,
    repeats: int = 1,
    instance_id: Optional[str] = None,
    max_n: int = MAX_VERIFY_N,
) -> BoundReport:
    """
    Build a BoundReport for one instance.

    Args:
        f: Objective oracle
        m: Partition matroid constraint
        gsemo_iterations: GSEMO budget (defaults to ten times the expected run-time bound)
        seed: Master seed for the GSEMO repeats
        repeats: Number of GSEMO runs
        instance_id: Identifier copied into the report
        max_n: Enumeration guard, never above 20

    Raises:
        EnumerationGuardError: if the instance is too large to enumerate
    """
    n = m.n
    guard("verify", n, min(max_n, MAX_VERIFY_N))
    d, dbar = m.d, m.dbar

    _, opt = brute_force_opt(f, m)
    eps = epsilon_j(f, n, d + dbar)
    monotone = is_monotone(f, n)
    submodular = check_submodular(f, n) if n <= MAX_SUBMODULAR_N else None

    gamma: Optional[float] = None
    if monotone:
        if n <= MAX_GAMMA_N:
            gamma = gamma_ij(f, n, dbar, d)
        else:
            logger.warning(f"Skipping gamma for n = {n} (limit {MAX_GAMMA_N})")

    bound1 = theorem1_bound(opt, eps, d, dbar)
    bound2 = theorem2_bound(opt, gamma, d, dbar) if gamma is not None else None

    iterations = gsemo_iterations
    if iterations is None:
        iterations = default_verify_iterations(n, d, dbar)

    greedy_value = greedy(f, m, OracleCounter()).best_value
    gsemo_values = []
    for repeat in range(repeats):
        params = GsemoParams(
            iterations=iterations, seed=derive_seed(seed, "verify", instance_id or "", repeat)
        )
        gsemo_values.append(gsemo(f, m, params, OracleCounter()).best_value)
    achieved = min(gsemo_values)

    report = BoundReport(
        instance_id=instance_id,
        objective=f.get_name(),
        n=n,
        k=m.k,
        d=d,
        dbar=dbar,
        opt_value=opt,
        epsilon_term=eps,
        gamma_term=gamma,
        monotone=monotone,
        submodular=submodular,
        theorem1_bound=bound1,
        theorem2_bound=bound2,
        expected_runtime_bound=expected_runtime_bound(n, d, dbar),
        gsemo_iterations=iterations,
        gsemo_values=gsemo_values,
        achieved_value=achieved,
        greedy_value=greedy_value,
        gsemo_meets_theorem1=achieved >= bound1 - TOLERANCE,
        gsemo_meets_theorem2=(achieved >= bound2 - TOLERANCE) if bound2 is not None else None,
        greedy_meets_theorem1=greedy_value >= bound1 - TOLERANCE,
    )

    if not report.gsemo_meets_theorem1:
        logger.warning(
            f"GSEMO value {achieved} below the submodular bound {bound1} "
            f"after {iterations} iterations"
        )
    return report
