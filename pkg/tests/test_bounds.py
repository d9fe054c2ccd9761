import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coverage_planner.bounds import (
    delta,
    evaluate_bounds,
    kappa_and_path,
    kappa_odd,
    prop2_bound,
    prop3_bound,
    solve_theta_star_odd,
    worst_case_instance,
)
from coverage_planner.errors import DomainError

SQ3 = math.sqrt(3)

# frozen from plain bisection on the tangent equation (see bisect_theta below)
THETA_STAR = 0.27237789369139803
KAPPA = 2.429547511174945


def residual(th):
    return math.tan(2 * th) * (1 + math.sin(th)) - (SQ3 - math.cos(th))


def bisect_theta():
    lo, hi = 0.0, math.pi / 4 - 1e-9
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if residual(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestTheta:
    def test_root(self):
        th = solve_theta_star_odd()
        assert 0 < th < math.pi / 4
        assert abs(residual(th)) < 1e-12
        assert th == pytest.approx(THETA_STAR, abs=1e-14)
        assert th == pytest.approx(bisect_theta(), abs=1e-14)
        assert math.degrees(th) == pytest.approx(15.6, abs=0.05)

    def test_bracket_sign(self):
        assert residual(0.0) == pytest.approx(-(SQ3 - 1))


class TestKappa:
    def test_value(self):
        assert kappa_odd() == pytest.approx(KAPPA, abs=1e-13)
        th = THETA_STAR
        assert kappa_odd(th) == pytest.approx(
            2 * math.sqrt((1 + math.sin(th)) ** 2 + (SQ3 - math.cos(th)) ** 2) - 2 * math.sin(th), abs=1e-15
        )

    def test_packing_path_seven(self):
        pp = kappa_and_path(7, 1.0)
        assert pp.kappa == pytest.approx(KAPPA)
        assert pp.p_odd == pytest.approx(3 + KAPPA)
        assert pp.p_odd == pytest.approx(5.4296, abs=1e-4)
        assert pp.l_tsp == 12.0
        assert pp.ratio == pytest.approx(2.2101, abs=1e-4)

    def test_scales_with_r(self):
        assert kappa_and_path(9, 2.5).p_odd == pytest.approx(2.5 * kappa_and_path(9, 1).p_odd)

    def test_small_n_rejected(self):
        with pytest.raises(DomainError):
            kappa_and_path(4, 1.0)

    def test_limits(self):
        assert kappa_and_path(10**7, 1.0).ratio == pytest.approx(2.0, abs=1e-6)
        assert evaluate_bounds(10**7, 1.0, 1.0).prop1_factor == pytest.approx(10 / 3, abs=1e-6)


class TestDelta:
    def test_seven(self):
        assert delta(7) == pytest.approx((4 - KAPPA) / (3 + KAPPA))
        assert delta(7) == pytest.approx(0.2892, abs=1e-4)
        assert evaluate_bounds(7, 1.0, 1.0).prop1_factor == pytest.approx(4.297, abs=1e-3)

    def test_strictly_decreasing(self):
        vals = [delta(n) for n in range(5, 1001)]
        assert all(b < a for a, b in zip(vals, vals[1:]))
        assert all(v > 0 for v in vals)

    def test_four_is_finite_three_is_not(self):
        assert delta(4) == pytest.approx((4 - KAPPA) / KAPPA)
        with pytest.raises(DomainError):
            delta(3)


class TestWorstCase:
    def test_five(self):
        scn = worst_case_instance(5, 1.0)
        expect = [(0, 0), (1, SQ3), (2, 0), (3, SQ3), (4, 0)]
        assert [tuple(p) for p in scn.targets] == pytest.approx(expect)

    def test_two(self):
        scn = worst_case_instance(2, 1.0)
        assert math.dist(*scn.targets) == pytest.approx(2.0)

    @given(st.integers(2, 30), st.floats(0.1, 10))
    def test_pairwise_spacing(self, n, r):
        t = worst_case_instance(n, r).targets
        for i, j in itertools.combinations(range(n), 2):
            d = math.dist(t[i], t[j])
            if j == i + 1:
                assert d == pytest.approx(2 * r, rel=1e-12)
            else:
                assert d >= 2 * r * (1 - 1e-12)
        assert sum(math.dist(t[i], t[i + 1]) for i in range(n - 1)) == pytest.approx(2 * (n - 1) * r)


class TestBoundFormulas:
    def test_prop2(self):
        assert prop2_bound(10, 1) == pytest.approx((5 / 3) * (90 + 1 + 8 * math.pi))
        assert prop2_bound(10, 1) == pytest.approx(193.55, abs=5e-3)

    def test_prop3_at_full_radius(self):
        for l_opt, m in [(0, 0), (3.5, 4), (20, 12)]:
            b, c = prop3_bound(l_opt, 1.0, m, 1.0)
            assert c == pytest.approx(40 * math.pi / 3 + 2)
            assert b == pytest.approx((5 / 3) * (9 * l_opt + 2 * m) + 40 * math.pi / 3 + 2)

    def test_prop3_domain(self):
        with pytest.raises(DomainError):
            prop3_bound(1, 1.0, 0, 0.0)
        with pytest.raises(DomainError):
            prop3_bound(1, 1.0, 0, 1.5)

    def test_report(self):
        rep = evaluate_bounds(7, 1.0, 5.0, m=4, rho_bar=0.5)
        d = rep.as_dict()
        assert d["n"] == 7 and d["m"] == 4 and d["rho_bar"] == 0.5
        assert rep.prop1_bound == pytest.approx(rep.prop1_factor * 5.0)
        assert rep.prop3_bound == pytest.approx(prop3_bound(5.0, 1.0, 4, 0.5)[0])
        assert min(rep.prop1_bound, rep.prop2_bound, rep.prop3_bound) >= rep.l_opt

    def test_small_n_has_no_delta(self):
        rep = evaluate_bounds(3, 1.0, 2.0)
        assert math.isnan(rep.delta_n)
        assert rep.prop2_bound == pytest.approx(prop2_bound(2.0, 1.0))
