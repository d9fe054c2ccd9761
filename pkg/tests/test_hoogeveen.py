import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from coverage_planner.errors import InvalidInputError
from coverage_planner.graph_core import euclidean_matrix
from coverage_planner.hoogeveen import hoogeveen_order
from coverage_planner.oracle import exact_st_tsp


def test_collinear_left_to_right():
    pts = [(k, 0.0) for k in (3, 0, 4, 1, 2)]
    vo = hoogeveen_order(pts, 1, 2, positions=True)
    assert [pts[k][0] for k in vo.order] == [0, 1, 2, 3, 4]
    assert vo.length == pytest.approx(4.0)


def test_unit_square():
    pts = [(0, 0), (1, 0), (1, 1), (0, 1)]
    vo = hoogeveen_order(pts, 0, 2, positions=True)
    assert vo.length <= (5 / 3) * (2 + math.sqrt(2)) + 1e-12
    assert exact_st_tsp(pts, 0, 2, positions=True).value == pytest.approx(2 + math.sqrt(2))


def test_two_nodes():
    vo = hoogeveen_order([[0, 2.5], [2.5, 0]], 1, 0)
    assert vo.order == (1, 0) and vo.length == 2.5


def test_bad_indices():
    with pytest.raises(InvalidInputError):
        hoogeveen_order([(0, 0), (1, 0)], 0, 0, positions=True)
    with pytest.raises(InvalidInputError):
        hoogeveen_order([(0, 0), (1, 0)], 0, 5, positions=True)


def test_callable_metric_with_count():
    pts = np.random.default_rng(0).uniform(0, 1, (6, 2))

    class M:
        n = 6

        def __call__(self, i, j):
            return float(np.hypot(*(pts[i] - pts[j])))

    assert hoogeveen_order(M(), 0, 5).order == hoogeveen_order(pts, 0, 5, positions=True).order


def test_random_eight_points_within_five_thirds():
    rng = np.random.default_rng(21)
    for _ in range(200):
        pts = rng.uniform(0, 1, (8, 2))
        vo = hoogeveen_order(pts, 0, 7, positions=True)
        assert vo.length <= (5 / 3) * exact_st_tsp(pts, 0, 7, positions=True).value + 1e-9


@given(st.integers(2, 9), st.integers(0, 10**6))
def test_order_is_permutation_with_consistent_length(n, seed):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0, 10, (n, 2))
    s, t = (int(v) for v in rng.choice(n, 2, replace=False))
    vo = hoogeveen_order(pts, s, t, positions=True)
    assert sorted(vo.order) == list(range(n))
    assert vo.order[0] == s and vo.order[-1] == t
    w = euclidean_matrix(pts)
    assert vo.length == pytest.approx(sum(w[a, b] for a, b in zip(vo.order, vo.order[1:])), abs=1e-9)
    assert hoogeveen_order(pts, s, t, positions=True) == vo
