import itertools
import math

import numpy as np
import pytest

from coverage_planner.convex_path import Disk, FixedPoint
from coverage_planner.errors import CapacityError, InvalidInputError, PreconditionError
from coverage_planner.free_planner import shortest_cover
from coverage_planner.graph_core import euclidean_matrix
from coverage_planner.instances import random_disjoint, trial_rng
from coverage_planner.oracle import (
    exact_cover_p1,
    exact_st_tsp,
    grid_sequence_oracle,
    optimal_interval_piercing,
    subtour_constraint_count,
)
from coverage_planner.scenario import Scenario


def brute_tsp(pts, s, t):
    w = euclidean_matrix(pts)
    mid = [k for k in range(len(pts)) if k not in (s, t)]
    return min(
        sum(w[a, b] for a, b in zip(seq, seq[1:])) for perm in itertools.permutations(mid) for seq in [(s, *perm, t)]
    )


class TestExactTsp:
    def test_collinear(self):
        res = exact_st_tsp([(0, 0), (5, 0), (2, 0)], 0, 1, positions=True)
        assert res.value == pytest.approx(5.0)
        assert tuple(res.structure) == (0, 2, 1)

    def test_unit_square(self):
        res = exact_st_tsp([(0, 0), (1, 0), (1, 1), (0, 1)], 0, 2, positions=True)
        assert res.value == pytest.approx(2 + math.sqrt(2))

    def test_against_permutations(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            n = int(rng.integers(3, 8))
            pts = rng.uniform(0, 1, (n, 2))
            assert exact_st_tsp(pts, 0, n - 1, positions=True).value == pytest.approx(brute_tsp(pts, 0, n - 1), abs=1e-12)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            exact_st_tsp(np.zeros((10, 2)) + np.arange(10)[:, None], 0, 9, positions=True)


class TestExactCover:
    def test_two_targets(self):
        assert exact_cover_p1(Scenario(((0, 0), (4, 0)), 1.0)).value == pytest.approx(3.0, abs=1e-9)

    def test_overlap_needs_relaxation_flag(self):
        scn = Scenario(((0, 0), (1.5, 0), (4, 0)), 1.0)
        with pytest.raises(PreconditionError):
            exact_cover_p1(scn)
        assert exact_cover_p1(scn, allow_overlap=True).value == pytest.approx(3.0, abs=1e-8)

    def test_capacity(self):
        scn = Scenario(tuple((3.0 * k, 0.0) for k in range(10)), 1.0)
        with pytest.raises(CapacityError):
            exact_cover_p1(scn)

    def test_not_above_heuristic(self):
        for trial in range(25):
            rng = trial_rng(32, trial)
            scn = random_disjoint(int(rng.integers(3, 7)), rng)
            assert exact_cover_p1(scn).value <= shortest_cover(scn).length + 1e-9

    def test_against_grid_over_all_orders(self):
        # independent route: sampled DP per visiting order, minimised over orders
        for trial in range(3):
            rng = trial_rng(33, trial)
            scn = random_disjoint(4, rng)
            circ = scn.circles()
            best = math.inf
            for perm in itertools.permutations([1, 2]):
                regs = [FixedPoint(scn.targets[0])] + [Disk(circ[k]) for k in (*perm, 3)]
                best = min(best, grid_sequence_oracle(regs, samples=200, rounds=25).value)
            assert exact_cover_p1(scn).value == pytest.approx(best, rel=1e-5)


class TestPiercing:
    def test_examples(self):
        assert optimal_interval_piercing([(0, 2), (1, 3), (5, 6)]).value == 2
        assert optimal_interval_piercing([(0, 10), (4, 6)]).value == 1
        assert optimal_interval_piercing([]).value == 0

    def test_errors(self):
        with pytest.raises(InvalidInputError):
            optimal_interval_piercing([(3, 1)])
        with pytest.raises(CapacityError):
            optimal_interval_piercing([(k, k) for k in range(21)])


class TestSubtourCount:
    def test_small_cases(self):
        five, six = subtour_constraint_count(5), subtour_constraint_count(6)
        assert int(five) == 1 and int(six) == 5
        assert five.closed_form == 9 and five.discrepancy
        assert six.closed_form == 2**5 - 10 - 1

    def test_direct_summation(self):
        for n in range(4, 12):
            expect = sum(math.comb(n - 2, k) for k in range(3, n - 1))
            assert subtour_constraint_count(n).value == expect
