import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverage_planner.errors import PreconditionError
from coverage_planner.free_planner import (
    base_set_circles,
    circles_overlap,
    initial_sensing_nodes,
    reduced_sensing_path,
    shortest_cover,
)
from coverage_planner.geometry import dist
from coverage_planner.instances import random_disjoint, random_overlapping, trial_rng
from coverage_planner.node_reduction import overlap_intervals
from coverage_planner.oracle import exact_st_tsp, optimal_interval_piercing
from coverage_planner.scenario import Scenario, covers_all


def collinear(n, spacing, r):
    return Scenario(tuple((k * spacing, 0.0) for k in range(n)), r)


class TestShortestCover:
    def test_two_targets(self):
        plan = shortest_cover(Scenario(((0, 0), (4, 0)), 1.0))
        assert plan.length == pytest.approx(3.0, abs=1e-9)
        assert plan.nodes[-1] == pytest.approx((3, 0), abs=1e-9)

    def test_collinear_five(self):
        plan = shortest_cover(collinear(5, 3.0, 1.0))
        assert plan.length == pytest.approx(11.0, abs=1e-8)
        assert all(abs(p[1]) < 1e-7 for p in plan.path)

    def test_overlap_rejected(self):
        with pytest.raises(PreconditionError):
            shortest_cover(Scenario(((0, 0), (1.5, 0)), 1.0))

    def test_within_five_thirds_of_tsp(self):
        for trial in range(40):
            rng = trial_rng(17, trial)
            scn = random_disjoint(int(rng.integers(4, 8)), rng)
            plan = shortest_cover(scn)
            assert covers_all(plan, scn)
            assert plan.length <= (5 / 3) * exact_st_tsp(scn.targets, scn.start, scn.end, positions=True).value + 1e-6


class TestBaseSet:
    def test_all_disjoint(self):
        assert base_set_circles(collinear(4, 3.0, 1.0)) == [0, 1, 2, 3]

    def test_chain_middle_first(self):
        # B at index 0 overlaps A and C, which are disjoint from each other
        scn = Scenario(((1.5, 0), (0, 0), (3, 0)), 1.0)
        assert base_set_circles(scn) == [0]

    def test_chain_end_first(self):
        assert base_set_circles(Scenario(((0, 0), (1.5, 0), (3, 0)), 1.0)) == [0, 2]

    def test_random_clusters(self):
        for trial in range(500):
            rng = trial_rng(3, trial)
            scn = random_overlapping(int(rng.integers(2, 10)), rng)
            base = base_set_circles(scn, random_order=bool(trial % 2), seed=trial)
            t, r = scn.targets, scn.r
            assert all(not circles_overlap(t[i], t[j], r) for i in base for j in base if i < j)
            assert all(any(circles_overlap(t[i], t[j], r) for j in base) for i in range(scn.n) if i not in base)


class TestInitialNodes:
    def test_isolated_center(self):
        scn = Scenario(((0, 0), (5, 5)), 1.0)
        assert initial_sensing_nodes(scn, [0, 1])[1] == (5, 5)

    def test_neighbor_on_base_perimeter(self):
        scn = Scenario(((0, 0), (1.5, 0)), 1.0)
        assert initial_sensing_nodes(scn, [0])[1] == pytest.approx((1, 0), abs=1e-12)

    def test_nodes_in_own_circle(self):
        for trial in range(200):
            rng = trial_rng(4, trial)
            scn = random_overlapping(int(rng.integers(2, 9)), rng)
            nodes = initial_sensing_nodes(scn, base_set_circles(scn))
            assert nodes[scn.start] == scn.targets[scn.start]
            assert all(dist(p, q) <= scn.r + 1e-9 for p, q in zip(nodes, scn.targets))


class TestReducedPath:
    def test_collinear_eighteen(self):
        scn = collinear(18, 1.0, 1.75)
        plan = reduced_sensing_path(scn)
        assert plan.node_count <= 6
        assert covers_all(plan, scn)
        assert max(abs(p[1]) for p in plan.path) < 1e-3

    def test_full_overlap_degenerates(self):
        scn = Scenario(((0, 0), (0.8, 0)), 1.0)
        plan = reduced_sensing_path(scn)
        assert plan.node_count == 1
        assert plan.nodes[0] == (0, 0)
        assert plan.length == pytest.approx(0.0, abs=1e-12)

    def test_seeded_order_reproducible(self):
        scn = random_overlapping(7, trial_rng(8, 0))
        a = reduced_sensing_path(scn, random_order=True, seed=5)
        b = reduced_sensing_path(scn, random_order=True, seed=5)
        assert a.nodes == b.nodes and a.length == b.length

    @settings(max_examples=40)
    @given(st.integers(0, 10**6), st.integers(2, 7))
    def test_coverage_and_optimal_piercing(self, seed, n):
        scn = random_overlapping(n, np.random.default_rng(seed))
        plan = reduced_sensing_path(scn)
        assert covers_all(plan, scn)
        assert plan.node_count <= scn.n
        ivs = overlap_intervals(plan.path, scn.circles())
        assert plan.node_count == optimal_interval_piercing(ivs).value

    @settings(max_examples=30)
    @given(st.integers(0, 10**6), st.integers(2, 7))
    def test_never_longer_than_shortest_cover(self, seed, n):
        scn = random_disjoint(n, np.random.default_rng(seed))
        assert reduced_sensing_path(scn).length <= shortest_cover(scn).length + 1e-9
