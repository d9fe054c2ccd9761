import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coverage_planner.errors import InvalidInputError
from coverage_planner.geometry import (
    Point2,
    Polygon,
    SensingCircle,
    as_point,
    dist,
    point_segment_distance,
    project_to_disk,
    regions_disjoint,
    segment_clear,
    segment_disk_interval,
    segment_region_intervals,
    visibility_region,
)

from helpers import polar_area, sees

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
points = st.tuples(coord, coord)


def box(x0, y0, x1, y1):
    return Polygon.from_points([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


class TestPrimitives:
    def test_non_finite_rejected(self):
        with pytest.raises(InvalidInputError):
            as_point((math.nan, 0.0))
        with pytest.raises(InvalidInputError):
            as_point((0.0, math.inf))

    def test_radius_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            SensingCircle((0, 0), 0.0)
        with pytest.raises(InvalidInputError):
            SensingCircle((0, 0), -1.0)

    def test_point_segment_distance(self):
        assert point_segment_distance((0, 1), (-1, 0), (1, 0)) == pytest.approx(1.0)
        assert point_segment_distance((3, 0), (-1, 0), (1, 0)) == pytest.approx(2.0)


class TestSegmentDiskInterval:
    c = SensingCircle((0, 0), 1.0)

    def test_chord_through_center(self):
        assert segment_disk_interval((-2, 0), (2, 0), self.c) == pytest.approx((0.25, 0.75))

    def test_tangency_is_degenerate_interval(self):
        assert segment_disk_interval((-2, 1), (2, 1), self.c) == pytest.approx((0.5, 0.5))

    def test_disjoint(self):
        assert segment_disk_interval((-2, 3), (2, 3), self.c) is None

    def test_degenerate_segment(self):
        with pytest.raises(InvalidInputError):
            segment_disk_interval((1, 1), (1, 1), self.c)

    def test_clamped_when_starting_inside(self):
        assert segment_disk_interval((0, 0), (4, 0), self.c) == pytest.approx((0.0, 0.25))

    @given(points, points, points, st.floats(0.1, 5))
    def test_endpoints_on_circle_unless_clamped(self, a, b, c, r):
        if dist(a, b) < 1e-6:
            return
        circle = SensingCircle(c, r)
        iv = segment_disk_interval(a, b, circle)
        if iv is None:
            steps = [k / 200 for k in range(201)]
            assert all(dist((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])), c) > r - 1e-9 for t in steps)
            return
        for t in iv:
            if 0.0 < t < 1.0:
                p = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
                assert abs(dist(p, c) - r) <= 1e-9 * max(1.0, r, dist(a, b))


class TestProjectToDisk:
    c = SensingCircle((0, 0), 1.0)

    def test_radial(self):
        assert project_to_disk((3, 0), self.c) == pytest.approx((1, 0))

    def test_interior_identity(self):
        assert project_to_disk((0.2, 0.1), self.c) == (0.2, 0.1)

    def test_center(self):
        assert project_to_disk((0, 0), self.c) == (0, 0)


class TestPolygon:
    def test_clockwise_rejected_by_constructor(self):
        with pytest.raises(InvalidInputError):
            Polygon(((0, 0), (0, 1), (1, 1), (1, 0)))

    def test_from_points_reorients(self):
        p = Polygon.from_points([(0, 0), (0, 1), (1, 1), (1, 0)])
        assert p.area == pytest.approx(1.0)

    def test_self_intersecting_rejected(self):
        with pytest.raises(InvalidInputError):
            Polygon.from_points([(0, 0), (1, 1), (1, 0), (0, 1)])

    def test_too_few_vertices(self):
        with pytest.raises(InvalidInputError):
            Polygon.from_points([(0, 0), (1, 1)])

    def test_strict_containment_excludes_boundary(self):
        sq = box(0, 0, 1, 1)
        assert sq.contains_strict((0.5, 0.5))
        assert not sq.contains_strict((1.0, 0.5))
        assert not sq.contains_strict((2.0, 0.5))

    def test_segment_clear_allows_grazing(self):
        sq = box(0, 0, 1, 1)
        assert segment_clear((-1, 0), (2, 0), [sq])  # runs along an edge
        assert segment_clear((0, 2), (2, 0), [sq])  # touches the corner (1, 1) only
        assert not segment_clear((-1, 2), (2, -1), [sq])  # through the interior
        assert not segment_clear((-1, 0.5), (2, 0.5), [sq])

    def test_convex_vertices_of_l_shape(self):
        ell = Polygon.from_points([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
        assert set(ell.convex_vertices()) == {(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)}


class TestVisibilityRegion:
    def test_empty_obstacles_is_full_disk(self):
        reg = visibility_region((0, 0), [], 1.0)
        assert reg.area == pytest.approx(math.pi, rel=1e-9)

    @given(st.floats(0.1, 10))
    def test_disk_area_for_any_radius(self, r):
        assert visibility_region((1, 2), [], r).area == pytest.approx(math.pi * r * r, rel=1e-9)

    def test_wall_through_target_gives_half_disk(self):
        wall = box(-5, -5, 5, 0)
        reg = visibility_region((0, 0), [wall], 1.0)
        assert reg.area == pytest.approx(math.pi / 2, rel=1e-9)
        assert reg.contains((0, 0.9)) and not reg.contains((0, -0.5))

    def test_square_shadow_area_matches_ray_casting(self):
        sq = box(1, 0, 2, 1)
        reg = visibility_region((0, 0), [sq], 2.0)
        assert reg.area < 4 * math.pi
        assert reg.area == pytest.approx(polar_area((0, 0), [sq], 2.0, 4000), rel=1e-3)
        # frozen from the polar-integration oracle at 20000 rays
        assert reg.area == pytest.approx(11.495574279339607, rel=1e-8)

    def test_wall_at_half_range_casts_shadow(self):
        wall = box(-5, 0.5, 5, 0.6)
        reg = visibility_region((0, 0), [wall], 1.0)
        assert reg.area < math.pi
        assert not reg.contains((0, 0.8))

    def test_target_inside_obstacle_rejected(self):
        with pytest.raises(InvalidInputError):
            visibility_region((0.5, 0.5), [box(0, 0, 1, 1)], 1.0)

    def test_membership_matches_line_of_sight(self):
        rng = random.Random(7)
        for _ in range(15):
            obstacles = []
            for _ in range(rng.randint(1, 3)):
                x, y = rng.uniform(-2, 2), rng.uniform(-2, 2)
                obstacles.append(box(x, y, x + rng.uniform(0.2, 1.5), y + rng.uniform(0.2, 1.5)))
            target = (rng.uniform(-3, 3), rng.uniform(-3, 3))
            if any(o.contains_strict(target) or o.on_boundary(target) for o in obstacles):
                continue
            r = rng.uniform(0.5, 3)
            reg = visibility_region(target, obstacles, r)
            assert reg.area == pytest.approx(polar_area(target, obstacles, r, 2000), rel=2e-3)
            for _ in range(150):
                p = (target[0] + rng.uniform(-r, r), target[1] + rng.uniform(-r, r))
                # keep away from the region boundary where rounding decides
                eps = 1e-6
                inner = sees(target, p, obstacles, r - eps)
                outer = sees(target, p, obstacles, r + eps)
                if inner == outer:
                    assert reg.contains(p) == inner

    def test_outline_stays_within_range(self):
        reg = visibility_region((0, 0), [box(0.5, -0.2, 0.7, 0.2)], 1.0)
        assert all(dist(p, (0, 0)) <= 1.0 + 1e-9 for p in reg.outline())


class TestRegionsDisjoint:
    def test_far_circles(self):
        assert regions_disjoint(SensingCircle((0, 0), 1), SensingCircle((3, 0), 1))

    def test_overlapping_circles(self):
        assert not regions_disjoint(SensingCircle((0, 0), 1), SensingCircle((1.5, 0), 1))

    def test_tangent_circles_meet(self):
        assert not regions_disjoint(SensingCircle((0, 0), 1), SensingCircle((2, 0), 1))

    def test_wall_separates_overlapping_disks(self):
        wall = box(0.7, -3, 0.8, 3)
        u = visibility_region((0, 0), [wall], 1.0)
        v = visibility_region((1.5, 0), [wall], 1.0)
        assert regions_disjoint(u, v)
        # dense membership sampling finds no common point either
        rng = random.Random(1)
        for _ in range(3000):
            p = (rng.uniform(-1, 2.5), rng.uniform(-1, 1))
            assert not (u.contains(p) and v.contains(p))

    def test_short_wall_leaves_overlap(self):
        wall = box(0.7, -0.05, 0.8, 0.05)
        u = visibility_region((0, 0), [wall], 1.0)
        v = visibility_region((1.5, 0), [wall], 1.0)
        assert not regions_disjoint(u, v)
        assert u.contains((0.75, 0.5)) and v.contains((0.75, 0.5))

    @given(points, points, st.floats(0.2, 3))
    def test_symmetric(self, a, b, r):
        wall = [box(-1, -1, -0.5, 1)]
        if any(o.contains_strict(p) for o in wall for p in (a, b)):
            return
        u = visibility_region(a, wall, r)
        v = visibility_region(b, wall, r)
        assert regions_disjoint(u, v) == regions_disjoint(v, u)


class TestSegmentRegionIntervals:
    def test_circle_and_disk_region_agree(self):
        c = SensingCircle((5, 0), 1.0)
        reg = visibility_region((5, 0), [], 1.0)
        a, b = Point2(0, 0), Point2(10, 0)
        assert segment_region_intervals(a, b, c) == pytest.approx([(0.4, 0.6)])
        assert [tuple(iv) for iv in segment_region_intervals(a, b, reg)] == pytest.approx([(0.4, 0.6)])

    def test_shadow_splits_segment(self):
        reg = visibility_region((0, 0), [box(-0.1, 0.4, 0.1, 0.5)], 1.0)
        ivs = segment_region_intervals((-1, 0.8), (1, 0.8), reg)
        assert len(ivs) == 2
