"""Tests for brute-force definitions, bounds and instance verification."""

import itertools
import math
from collections import Counter

import numpy as np
import pytest

from partition_gsemo.analysis.bounds import (
    expected_runtime_bound,
    theorem1_bound,
    theorem2_bound,
)
from partition_gsemo.analysis.brute_force import brute_force_opt
from partition_gsemo.analysis.definitions import (
    check_submodular,
    epsilon_j,
    gamma_ij,
    is_monotone,
)
from partition_gsemo.analysis.verification import default_verify_iterations, verify_instance
from partition_gsemo.core.models import PartitionMatroid, Solution
from partition_gsemo.errors import EnumerationGuardError
from partition_gsemo.instances.constraints import make_partition_constraint
from partition_gsemo.objectives.base import SetFunction
from partition_gsemo.objectives.coverage import random_coverage
from partition_gsemo.objectives.graph import WeightedGraph
from partition_gsemo.objectives.max_cut import MaxCutFunction
from partition_gsemo.objectives.modular import ModularFunction
from tests.helpers import random_graph, random_partition


class SquaredCardinality(SetFunction):
    """f(X) = |X|^2: monotone, supermodular."""

    def __init__(self, n: int):
        self._n = n

    @property
    def n(self) -> int:
        return self._n

    def get_name(self) -> str:
        return "squared_cardinality"

    def value(self, bits):
        return float(np.count_nonzero(bits)) ** 2


def sample_functions(rng, count):
    """Cuts (non-monotone unless edgeless), coverage and modular functions on 2..7 elements."""
    for index in range(count):
        n = int(rng.integers(2, 8))
        if index % 3 == 0:
            edges = int(rng.integers(0, n * (n - 1) // 2 + 1))
            yield MaxCutFunction(random_graph(n, edges, rng)), n
        elif index % 3 == 1:
            yield random_coverage(n, 10, rng), n
        else:
            yield ModularFunction(rng.random(n)), n


def integer_cut(n, rng):
    """Max-cut with small integer weights, so every subset value is exact and ties are common."""
    rows, cols = np.triu_indices(n, k=1)
    weights = rng.integers(0, 4, size=rows.shape[0])
    edges = [(int(u), int(v), float(w)) for u, v, w in zip(rows, cols, weights) if w]
    return MaxCutFunction(WeightedGraph(n, edges))


def enumerate_optimum(f, m):
    """Optimum by itertools over bit tuples; key (-value, size, bits) encodes the tie-break."""
    best = None
    for bits in itertools.product((0, 1), repeat=m.n):
        used = Counter(m.assignment[v] for v in range(m.n) if bits[v])
        if any(used[block] > m.thresholds[block] for block in used):
            continue
        key = (-f(Solution(np.array(bits, dtype=bool))), sum(bits), bits)
        if best is None or key < best:
            best = key
    return Solution(np.array(best[2], dtype=bool)), -best[0]


class TestEpsilon:
    @pytest.mark.parametrize("j, expected", [(0, 0.0), (1, 0.0), (2, 0.0), (3, 0.5)])
    def test_g3(self, g3_cut, j, expected):
        assert epsilon_j(g3_cut, 3, j) == pytest.approx(expected, abs=1e-9)

    def test_monotone_function_has_zero_epsilon(self, modular4):
        assert epsilon_j(modular4, 4, 4) == 0.0

    def test_non_decreasing_in_j(self):
        rng = np.random.default_rng(41)
        for f, n in sample_functions(rng, 30):
            values = [epsilon_j(f, n, j) for j in range(n + 2)]
            assert values == sorted(values)

    def test_vanishes_exactly_for_monotone_functions(self):
        # j = n + 1 admits every X, including the full ground set
        rng = np.random.default_rng(42)
        for f, n in sample_functions(rng, 30):
            assert (epsilon_j(f, n, n + 1) <= 1e-9) == is_monotone(f, n)

    def test_negative_j(self, g3_cut):
        with pytest.raises(ValueError):
            epsilon_j(g3_cut, 3, -1)

    def test_guard(self):
        with pytest.raises(EnumerationGuardError, match="n <= 20"):
            epsilon_j(ModularFunction([1.0] * 21), 21, 2)


class TestGamma:
    @pytest.mark.parametrize("i", range(0, 5))
    @pytest.mark.parametrize("j", range(1, 5))
    def test_modular_ratio_is_one(self, modular4, i, j):
        assert gamma_ij(modular4, 4, i, j) == pytest.approx(1.0, abs=1e-9)

    def test_submodular_ratio_at_least_one(self, rng):
        f = random_coverage(8, 15, rng)
        assert gamma_ij(f, 8, 3, 4) >= 1.0 - 1e-9

    def test_supermodular_ratio_below_one(self):
        assert gamma_ij(SquaredCardinality(4), 4, 1, 2) == pytest.approx(0.5)

    @pytest.mark.parametrize(
        "make", [lambda rng: random_coverage(6, 12, rng), lambda rng: SquaredCardinality(6)]
    )
    def test_non_increasing_in_i_and_j(self, make):
        rng = np.random.default_rng(43)
        for _ in range(5):
            f = make(rng)
            table = {(i, j): gamma_ij(f, 6, i, j) for i in range(5) for j in range(1, 5)}
            for (i, j), value in table.items():
                if i < 4:
                    assert table[(i + 1, j)] <= value + 1e-12
                if j < 4:
                    assert table[(i, j + 1)] <= value + 1e-12
                assert table[(0, j)] == table[(1, j)]

    def test_no_informative_pair(self):
        assert math.isinf(gamma_ij(ModularFunction([0.0, 0.0, 0.0]), 3, 2, 2))

    def test_guard(self):
        with pytest.raises(EnumerationGuardError):
            gamma_ij(ModularFunction([1.0] * 17), 17, 1, 1)


class TestStructureChecks:
    def test_random_cuts_are_submodular(self):
        rng = np.random.default_rng(21)
        for _ in range(50):
            assert check_submodular(MaxCutFunction(random_graph(8, 12, rng)), 8)

    def test_squared_cardinality_is_not_submodular(self):
        assert not check_submodular(SquaredCardinality(5), 5)

    def test_monotonicity(self, g3_cut, modular4, rng):
        assert is_monotone(modular4, 4)
        assert is_monotone(random_coverage(6, 10, rng), 6)
        assert not is_monotone(g3_cut, 3)

    def test_submodular_guard(self):
        with pytest.raises(EnumerationGuardError):
            check_submodular(ModularFunction([1.0] * 13), 13)


class TestBruteForce:
    def test_g3(self, g3_cut, g3_matroid):
        solution, value = brute_force_opt(g3_cut, g3_matroid)
        assert value == pytest.approx(0.8)
        assert solution == Solution.from_indices(3, [1])

    def test_matches_itertools_enumeration(self):
        rng = np.random.default_rng(44)
        for index in range(50):
            n = int(rng.integers(2, 9))
            m = random_partition(n, int(rng.integers(1, n + 1)), rng)
            if index % 2:
                f = integer_cut(n, rng)
            else:
                f = ModularFunction(rng.integers(0, 3, size=n).astype(float))
            assert brute_force_opt(f, m) == enumerate_optimum(f, m)

    def test_lexicographic_tie_break(self):
        f = ModularFunction([1.0, 1.0, 1.0])
        solution, value = brute_force_opt(f, PartitionMatroid.cardinality(3, 2))
        assert value == 2.0
        # bit vectors compare element 0 first: (0, 1, 1) < (1, 0, 1) < (1, 1, 0)
        assert solution.indices() == [1, 2]

    def test_guard(self):
        f = ModularFunction([1.0] * 25)
        with pytest.raises(EnumerationGuardError):
            brute_force_opt(f, PartitionMatroid.cardinality(25, 3))


class TestBounds:
    def test_submodular_bound(self):
        assert theorem1_bound(1.0, 0.0, 2, 2) == pytest.approx(0.63212, abs=1e-5)

    def test_monotone_bound(self):
        assert theorem2_bound(1.0, 1.0, 2, 1) == pytest.approx(0.39347, abs=1e-5)

    def test_gamma_is_capped(self):
        assert theorem2_bound(1.0, math.inf, 2, 1) == theorem2_bound(1.0, 1.0, 2, 1)
        assert theorem2_bound(1.0, 0.5, 2, 1) < theorem2_bound(1.0, 1.0, 2, 1)

    def test_negative_bound_is_clamped(self):
        assert theorem1_bound(1.0, 10.0, 4, 2) == 0.0

    @pytest.mark.parametrize("d, dbar", [(2, 3), (2, 0)])
    def test_invalid_thresholds(self, d, dbar):
        with pytest.raises(ValueError):
            theorem1_bound(1.0, 0.0, d, dbar)

    def test_runtime_bound(self):
        assert expected_runtime_bound(8, 4, 4) == pytest.approx(math.e * 160)
        assert default_verify_iterations(8, 4, 4) == 10 * math.ceil(math.e * 160)


class TestVerifyInstance:
    def test_g3(self, g3_cut, g3_matroid):
        report = verify_instance(g3_cut, g3_matroid, instance_id="g3")
        assert report.opt_value == pytest.approx(0.8)
        assert report.epsilon_term == pytest.approx(0.5)
        assert report.theorem1_bound <= report.opt_value
        assert report.monotone is False
        assert report.submodular is True
        assert report.gamma_term is None and report.theorem2_bound is None
        assert report.gsemo_meets_theorem1 and report.greedy_meets_theorem1
        assert report.gsemo_iterations == default_verify_iterations(3, 2, 1)

    def test_modular(self, modular4):
        report = verify_instance(modular4, PartitionMatroid.cardinality(4, 2), repeats=3)
        assert report.gamma_term == pytest.approx(1.0)
        assert report.opt_value == 5.0
        assert len(report.gsemo_values) == 3
        assert report.achieved_value == min(report.gsemo_values)
        assert report.gsemo_meets_theorem2

    def test_oversized_instance(self):
        f = ModularFunction([1.0] * 21)
        with pytest.raises(EnumerationGuardError, match="verify"):
            verify_instance(f, PartitionMatroid.cardinality(21, 2))


def _bound_check(count: int, monotone: bool, seed: int) -> int:
    """Number of instances whose GSEMO value meets the relevant guarantee."""
    rng = np.random.default_rng(seed)
    met = 0
    for index in range(count):
        k = 1 + index % 2
        m = make_partition_constraint(8, k, rng)
        if monotone:
            f = random_coverage(8, 20, rng)
        else:
            f = MaxCutFunction(random_graph(8, 19, rng))
        report = verify_instance(f, m, seed=seed, instance_id=str(index))
        met += report.gsemo_meets_theorem2 if monotone else report.gsemo_meets_theorem1
    return met


def test_submodular_guarantee_on_small_instances():
    assert _bound_check(6, monotone=False, seed=1) >= 5


def test_monotone_guarantee_on_small_instances():
    assert _bound_check(6, monotone=True, seed=2) >= 5


@pytest.mark.slow
def test_submodular_guarantee_fifty_instances():
    assert _bound_check(50, monotone=False, seed=100) >= 48


@pytest.mark.slow
def test_monotone_guarantee_fifty_instances():
    assert _bound_check(50, monotone=True, seed=200) >= 48
