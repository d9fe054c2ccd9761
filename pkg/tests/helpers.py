"""Independent geometric checks built on shapely, shared by the tests."""

import math

import shapely
from shapely.geometry import LineString, Point
from shapely.geometry import Polygon as SPolygon


def shapely_obstacles(obstacles):
    return [SPolygon(o.vertices) for o in obstacles]


DEPTH_TOL = 1e-9


def penetration(a, b, poly, samples=64):
    """Deepest point of segment ab inside poly, measured as distance to the boundary."""
    line = LineString([tuple(a), tuple(b)])
    if not line.relate_pattern(poly, "T********"):
        return 0.0
    inter = line.intersection(poly)
    depth = 0.0
    for g in getattr(inter, "geoms", [inter]):
        if g.geom_type != "LineString" or g.length == 0.0:
            continue
        for k in range(samples + 1):
            q = g.interpolate(k / samples, normalized=True)
            if poly.contains(q):
                depth = max(depth, poly.exterior.distance(q))
    return depth


def sees(target, p, obstacles, r, tol=1e-9):
    """Range and line-of-sight predicates, evaluated with shapely (grazing within DEPTH_TOL allowed)."""
    if math.dist(target, p) > r + tol:
        return False
    if math.dist(target, p) <= tol:
        return True
    return all(penetration(target, p, poly) <= DEPTH_TOL for poly in shapely_obstacles(obstacles))


def path_collision_free(path, obstacles):
    polys = shapely_obstacles(obstacles)
    for a, b in zip(path, path[1:]):
        if math.dist(a, b) == 0.0:
            if any(poly.exterior.distance(Point(a)) > DEPTH_TOL and poly.contains(Point(a)) for poly in polys):
                return False
            continue
        if any(penetration(a, b, poly) > DEPTH_TOL for poly in polys):
            return False
    return True


def ray_reach(target, theta, obstacles, r):
    """Distance along direction theta to where the ray first enters an obstacle interior, capped at r."""
    far = (target[0] + r * math.cos(theta), target[1] + r * math.sin(theta))
    ray = LineString([tuple(target), far])
    best = r
    for poly in shapely_obstacles(obstacles):
        inter = ray.intersection(poly)
        for g in getattr(inter, "geoms", [inter]):
            if g.is_empty or g.geom_type != "LineString" or g.length <= 1e-12:
                continue  # isolated touches do not block
            if not poly.boundary.buffer(1e-12).contains(g.interpolate(0.5, normalized=True)):
                best = min(best, min(math.dist(target, c) for c in g.coords))
    return best


def polar_area(target, obstacles, r, k=20000):
    step = 2 * math.pi / k
    return 0.5 * sum(ray_reach(target, (j + 0.5) * step, obstacles, r) ** 2 for j in range(k)) * step
