import pytest
from hypothesis import given
from hypothesis import strategies as st

from coverage_planner.errors import InternalInvariantError, InvalidInputError
from coverage_planner.geometry import Polygon, SensingCircle, visibility_region
from coverage_planner.node_reduction import (
    OverlapInterval,
    cumulative_lengths,
    overlap_intervals,
    point_at,
    reduce_nodes,
)
from coverage_planner.oracle import optimal_interval_piercing

LINE = [(0, 0), (10, 0)]


def ivs(*pairs):
    return [OverlapInterval(k, a, b) for k, (a, b) in enumerate(pairs)]


class TestOverlapIntervals:
    def test_crossing(self):
        (iv,) = overlap_intervals(LINE, [SensingCircle((5, 0), 1)])
        assert (iv.a, iv.b) == pytest.approx((4, 6))

    def test_starts_inside(self):
        (iv,) = overlap_intervals(LINE, [SensingCircle((0, 0), 1)])
        assert (iv.a, iv.b) == pytest.approx((0, 1))

    def test_tangency(self):
        a, b = overlap_intervals(LINE, [SensingCircle((5, 1), 1), SensingCircle((5, 2), 2)])
        assert (a.a, a.b) == pytest.approx((5, 5))
        assert (b.a, b.b) == pytest.approx((5, 5))

    def test_missed_region(self):
        with pytest.raises(InternalInvariantError):
            overlap_intervals(LINE, [SensingCircle((5, 2), 1)])

    def test_polyline_and_reentry(self):
        path = [(0, 0), (4, 0), (4, 4), (0, 4)]
        (iv,) = overlap_intervals(path, [SensingCircle((2, 2), 2.1)])
        assert iv.a == pytest.approx(2 - 0.64031242374328, abs=1e-9)
        assert len(iv.candidates) == 2  # each of the three sides passes through

    def test_viewing_region(self):
        wall = Polygon.from_points([(4.8, -1.5), (5.2, -1.5), (5.2, -0.5), (4.8, -0.5)])
        reg = visibility_region((5, -2), [wall], 3.0)
        (iv,) = overlap_intervals(LINE, [reg])
        # the wall hides the stretch right above the target
        assert iv.b < 5.0

    def test_single_point_path(self):
        (iv,) = overlap_intervals([(0, 0)], [SensingCircle((0.5, 0), 1)])
        assert (iv.a, iv.b) == (0.0, 0.0)


class TestReduceNodes:
    def test_hand_trace(self):
        red = reduce_nodes(ivs((0, 2), (1, 3), (5, 6)), LINE)
        assert red.arclengths == [1, 5]
        assert red.assignment == {0: 0, 1: 0, 2: 1}
        assert red.points == [(1, 0), (5, 0)]

    def test_nesting(self):
        red = reduce_nodes(ivs((0, 10), (4, 6)), LINE)
        assert red.arclengths == [4]

    def test_empty(self):
        with pytest.raises(InvalidInputError):
            reduce_nodes([], LINE)

    def test_reversed_interval(self):
        with pytest.raises(InvalidInputError):
            OverlapInterval(0, 3.0, 1.0)

    def test_point_at(self):
        path = [(0, 0), (3, 0), (3, 4)]
        assert cumulative_lengths(path) == [0, 3, 7]
        assert point_at(path, 5) == pytest.approx((3, 2))
        assert point_at(path, -1) == (0, 0) and point_at(path, 99) == (3, 4)

    @given(
        st.lists(
            st.tuples(st.integers(0, 40), st.integers(0, 8)),
            min_size=1,
            max_size=12,
        )
    )
    def test_matches_brute_force_piercing(self, raw):
        intervals = ivs(*[(a / 4, (a + w) / 4) for a, w in raw])
        red = reduce_nodes(intervals, [(0, 0), (20, 0)])
        assert len(red.arclengths) == optimal_interval_piercing(intervals).value
        assert all(any(iv.a <= s <= iv.b for s in red.arclengths) for iv in intervals)
