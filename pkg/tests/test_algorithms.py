"""Tests for GREEDY, GSEMO, the population archive and seeding."""

import importlib
import math

import numpy as np
import pytest
from pydantic import ValidationError

from partition_gsemo.algorithms.greedy import GREEDY, GreedySolver, greedy
from partition_gsemo.algorithms.gsemo import GSEMO, GsemoSolver, gsemo, mutate
from partition_gsemo.algorithms.models import GsemoParams, RunRecord
from partition_gsemo.algorithms.population import Population, survival_update
from partition_gsemo.algorithms.registry import ALGORITHMS, make_solver
from partition_gsemo.algorithms.seeding import MAX_SEED, derive_seed, make_rng
from partition_gsemo.core.bi_objective import evaluate_bi
from partition_gsemo.core.models import (
    NEGATIVE_INFINITY,
    BiValue,
    OracleCounter,
    PartitionMatroid,
    Solution,
)
from partition_gsemo.errors import LengthMismatchError
from partition_gsemo.objectives.max_cut import MaxCutFunction
from partition_gsemo.objectives.modular import ModularFunction
from tests.helpers import random_graph, random_partition


def greedy_call_limit(n: int, d: int) -> int:
    return 1 + sum(n - j + 1 for j in range(1, d + 1))


def naive_greedy(f, m):
    """Textbook GREEDY on index lists: feasibility by counting, uncounted evaluations."""
    chosen = []
    while True:
        base = f(Solution.from_indices(m.n, chosen))
        best, best_gain = None, 0.0
        for v in range(m.n):
            if v in chosen:
                continue
            candidate = chosen + [v]
            used = [sum(1 for u in candidate if m.assignment[u] == b) for b in range(m.k)]
            if any(count > limit for count, limit in zip(used, m.thresholds)):
                continue
            gain = f(Solution.from_indices(m.n, candidate)) - base
            if best is None or gain > best_gain:
                best, best_gain = v, gain
        if best is None or not best_gain > 0:
            return sorted(chosen), base
        chosen.append(best)


class TestGreedy:
    def test_g3(self, g3_cut, g3_matroid):
        counter = OracleCounter()
        record = greedy(g3_cut, g3_matroid, counter)
        assert record.algorithm == GREEDY
        assert record.best_value == pytest.approx(0.8)
        assert record.best_solution == [1]
        # f(empty), three candidates, then only element 2 is still addable
        assert record.oracle_calls == counter.calls == 5
        assert record.trace == [(1, 0.0), (4, pytest.approx(0.8))]

    def test_lowest_index_wins_ties(self):
        f = ModularFunction([1.0, 1.0, 1.0])
        record = greedy(f, PartitionMatroid.cardinality(3, 1), OracleCounter())
        assert record.best_solution == [0]

    def test_stops_without_positive_gain(self):
        f = ModularFunction([0.0, 0.0, 0.0])
        record = greedy(f, PartitionMatroid.cardinality(3, 2), OracleCounter())
        assert record.best_solution == []
        assert record.oracle_calls == 4

    def test_respects_block_thresholds(self, modular4):
        m = PartitionMatroid(assignment=(0, 0, 1, 1), thresholds=(1, 1))
        record = greedy(modular4, m, OracleCounter())
        assert record.best_solution == [1, 3]
        assert record.best_value == 5.0

    def test_call_bound_on_random_instances(self):
        rng = np.random.default_rng(3)
        for _ in range(40):
            n = int(rng.integers(2, 21))
            graph = random_graph(n, int(rng.integers(0, n * (n - 1) // 2 + 1)), rng)
            m = random_partition(n, int(rng.integers(1, n + 1)), rng)
            record = greedy(MaxCutFunction(graph), m, OracleCounter())
            assert record.oracle_calls <= greedy_call_limit(n, m.d)
            assert len(record.best_solution) <= m.d

    def test_value_matches_solution(self, rng):
        f = MaxCutFunction(random_graph(15, 40, rng))
        record = greedy(f, PartitionMatroid.cardinality(15, 7), OracleCounter())
        assert record.best_value == f(Solution.from_indices(15, record.best_solution))

    def test_size_mismatch(self, g3_cut):
        with pytest.raises(ValueError):
            greedy(g3_cut, PartitionMatroid.cardinality(4, 1), OracleCounter())

    def test_gains_use_cached_base_value(self, g3_cut, g3_matroid, mocker):
        module = importlib.import_module("partition_gsemo.algorithms.greedy")
        spy = mocker.spy(module, "marginal_gain")
        record = greedy(g3_cut, g3_matroid, OracleCounter())
        # every call except f(empty) is one candidate gain
        assert spy.call_count == record.oracle_calls - 1
        assert all(call.kwargs["base_value"] is not None for call in spy.call_args_list)

    def test_matches_naive_reference(self):
        rng = np.random.default_rng(17)
        for _ in range(60):
            n = int(rng.integers(1, 9))
            m = random_partition(n, int(rng.integers(1, n + 1)), rng)
            if rng.random() < 0.5:
                edges = int(rng.integers(0, n * (n - 1) // 2 + 1))
                f = MaxCutFunction(random_graph(n, edges, rng))
            else:
                # small integer weights force ties between candidates
                f = ModularFunction(rng.integers(0, 3, size=n).astype(float))
            expected_solution, expected_value = naive_greedy(f, m)
            record = greedy(f, m, OracleCounter())
            assert record.best_solution == expected_solution
            assert record.best_value == expected_value


class TestGsemo:
    @pytest.mark.parametrize("iterations", [0, 1, 100, 10_000])
    def test_exact_call_count(self, iterations):
        rng = np.random.default_rng(iterations)
        f = MaxCutFunction(random_graph(12, 30, rng))
        m = random_partition(12, 3, rng)
        counter = OracleCounter()
        record = gsemo(f, m, GsemoParams(iterations=iterations, seed=1), counter)
        assert record.oracle_calls == counter.calls == iterations + 1

    def test_zero_iterations_returns_empty_set(self, g3_cut, g3_matroid):
        record = gsemo(g3_cut, g3_matroid, GsemoParams(iterations=0, seed=0), OracleCounter())
        assert record.algorithm == GSEMO
        assert record.best_value == 0.0
        assert record.best_solution == []

    def test_finds_g3_optimum(self, g3_cut, g3_matroid):
        record = gsemo(g3_cut, g3_matroid, GsemoParams(iterations=250, seed=0), OracleCounter())
        assert record.best_value == pytest.approx(0.8)

    def test_same_seed_same_record(self, rng):
        f = MaxCutFunction(random_graph(20, 60, rng))
        m = PartitionMatroid.cardinality(20, 10)
        params = GsemoParams(iterations=500, seed=derive_seed(9, "gsemo", "x", 0))
        first = gsemo(f, m, params, OracleCounter(), trace_stride=20)
        second = gsemo(f, m, params, OracleCounter(), trace_stride=20)
        assert first == second

    def test_trace(self, g3_cut, g3_matroid):
        record = gsemo(
            g3_cut, g3_matroid, GsemoParams(iterations=25, seed=4), OracleCounter(), trace_stride=10
        )
        assert [t for t, _ in record.trace] == [0, 10, 20, 25]
        assert record.trace[-1][1] == record.best_value

    def test_population_invariants_hold(self):
        rng = np.random.default_rng(11)
        for run in range(10):
            f = MaxCutFunction(random_graph(12, 25, rng))
            m = random_partition(12, 2, rng)
            violations = []
            best_so_far = []

            def observe(t, population):
                violations.extend(population.invariant_violations(m.d))
                best_so_far.append(population.best_value)

            gsemo(f, m, GsemoParams(iterations=1000, seed=run), OracleCounter(), observer=observe)
            assert violations == []
            assert best_so_far == sorted(best_so_far)

    def test_solver_interface(self, g3_cut, g3_matroid):
        params = GsemoParams(iterations=50, seed=0)
        solvers = [make_solver(name, params) for name in ALGORITHMS]
        assert [type(s) for s in solvers] == [GreedySolver, GsemoSolver]
        assert [s.get_name() for s in solvers] == [GREEDY, GSEMO]
        for solver in solvers:
            assert solver.solve(g3_cut, g3_matroid, OracleCounter()).best_value > 0

    def test_solver_matches_function(self, g3_cut, g3_matroid):
        params = GsemoParams(iterations=200, seed=3)
        direct = gsemo(g3_cut, g3_matroid, params, OracleCounter(), trace_stride=10)
        solver = make_solver(GSEMO, params, trace_stride=10)
        assert solver.solve(g3_cut, g3_matroid, OracleCounter()) == direct

    def test_make_solver_refuses(self):
        with pytest.raises(ValueError, match="Unknown algorithm"):
            make_solver("anneal")
        with pytest.raises(ValueError, match="GsemoParams"):
            make_solver(GSEMO)


class TestMutation:
    def test_flip_statistics(self):
        n = 20
        rng = make_rng(5)
        empty = Solution.empty(n)
        flips = np.array([mutate(empty, n, rng).cardinality for _ in range(20_000)])
        assert flips.mean() == pytest.approx(1.0, abs=0.05)
        assert (flips == 0).mean() == pytest.approx((1 - 1 / n) ** n, abs=0.02)

    def test_single_bit_flip_probability(self):
        rng = make_rng(11)
        parent = Solution.from_indices(3, [1])
        only_first_flipped = Solution.from_indices(3, [0, 1])
        trials = 100_000
        hits = sum(mutate(parent, 3, rng) == only_first_flipped for _ in range(trials))
        # (1/n)(1 - 1/n)^(n-1) at n = 3
        assert hits / trials == pytest.approx(4 / 27, abs=0.01)
        assert parent.indices() == [1]

    def test_no_flip_probability(self):
        rng = make_rng(12)
        parent = Solution.from_indices(2, [0])
        trials = 100_000
        unchanged = sum(mutate(parent, 2, rng) == parent for _ in range(trials))
        assert unchanged / trials == pytest.approx(0.25, abs=0.01)
        assert parent.indices() == [0]

    def test_parent_is_not_modified(self, rng):
        parent = Solution.from_indices(10, [2, 5, 7])
        before = parent.bits.copy()
        children = [mutate(parent, 10, rng) for _ in range(200)]
        assert np.array_equal(parent.bits, before)
        assert any(child != parent for child in children)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            mutate(Solution.empty(3), 4, make_rng(0))


class TestPopulation:
    def make(self, f, m, *index_sets):
        counter = OracleCounter()
        return [
            (x, evaluate_bi(f, m, x, counter))
            for x in (Solution.from_indices(m.n, indices) for indices in index_sets)
        ]

    def test_survival_update(self, g3_cut, g3_matroid):
        empty, one, zero, infeasible, pair = self.make(
            g3_cut, g3_matroid, [], [1], [0], [0, 1], [0, 2]
        )
        population = Population([empty]).survival_update(one)
        assert len(population) == 2

        # strictly dominated candidates leave the archive unchanged
        for candidate in (zero, infeasible, pair):
            assert population.survival_update(candidate) is population
        assert population.best() == one

    def test_functional_form(self, g3_cut, g3_matroid):
        empty, one = self.make(g3_cut, g3_matroid, [], [1])
        start = Population([empty])
        updated = survival_update(start, one)
        assert len(start) == 1
        assert [x.indices() for x, _ in updated] == [[], [1]]

    def test_equal_candidate_replaces_entry(self):
        f = ModularFunction([1.0, 1.0])
        m = PartitionMatroid.cardinality(2, 1)
        empty, first, second = self.make(f, m, [], [0], [1])
        population = Population([empty, first]).survival_update(second)
        assert [x.indices() for x, _ in population] == [[], [1]]

    def test_best_prefers_smaller_cardinality(self):
        a = (Solution.from_indices(3, [0]), BiValue(1.0, -1))
        b = (Solution.from_indices(3, [1, 2]), BiValue(1.0, -2))
        assert Population([b, a]).best() == a

    def test_invariant_violations_reported(self):
        entries = [
            (Solution.from_indices(2, [0]), BiValue(1.0, -1)),
            (Solution.from_indices(2, [0, 1]), BiValue(NEGATIVE_INFINITY, -2)),
        ]
        problems = Population(entries).invariant_violations(d=0)
        assert any("empty solution" in p for p in problems)
        assert any("infeasible" in p for p in problems)
        assert any("exceeds" in p for p in problems)


class TestSeeding:
    def test_deterministic_and_distinct(self):
        assert derive_seed(1, "gsemo", "abc", 0) == derive_seed(1, "gsemo", "abc", 0)
        assert derive_seed(1, "gsemo", "abc", 0) != derive_seed(1, "gsemo", "abc", 1)
        assert derive_seed(1, "gsemo", "abc", 0) != derive_seed(2, "gsemo", "abc", 0)

    def test_range(self):
        assert 0 <= derive_seed(MAX_SEED, "graph", 50, "0.2", 3) <= MAX_SEED
        with pytest.raises(ValueError):
            derive_seed(-1, "x")

    def test_make_rng_reproducible(self):
        assert np.array_equal(make_rng(42).random(5), make_rng(42).random(5))


class TestRunRecord:
    def test_trace_must_not_decrease(self):
        with pytest.raises(ValidationError):
            RunRecord(algorithm=GSEMO, oracle_calls=3, best_value=1.0, trace=[(0, 1.0), (1, 0.5)])

    def test_key(self):
        record = RunRecord(algorithm=GSEMO, instance_id="i", repeat=2, oracle_calls=1, best_value=0)
        assert record.key == ("i", GSEMO, 2)

    def test_negative_iterations_rejected(self):
        with pytest.raises(ValidationError):
            GsemoParams(iterations=-1, seed=0)

    def test_json_round_trip(self, g3_cut, g3_matroid):
        record = gsemo(
            g3_cut, g3_matroid, GsemoParams(iterations=10, seed=1), OracleCounter(), trace_stride=3
        )
        assert RunRecord.model_validate_json(record.model_dump_json()) == record
        assert math.isfinite(record.best_value)
