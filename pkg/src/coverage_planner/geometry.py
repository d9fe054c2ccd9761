"""Planar primitives: points, disks, polygons and range-limited visibility regions.

Everything here is a pure function of immutable values.  Angles are radians,
lengths are in scenario units.  Visibility regions are kept exact: their
boundary is a closed loop of straight pieces and circular arcs centred at the
target, and their area is accumulated from circular sectors and triangles.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import InvalidInputError

TAU = 2.0 * math.pi
ANGLE_TOL = 1e-9  # event merging in the angular sweep
TANGENT_TOL = 1e-12  # normalised discriminant treated as tangency
MEMBER_TOL = 1e-9  # closed-set membership slack, absolute


class Point2(NamedTuple):
    x: float
    y: float


PointLike = Union[Point2, Sequence[float]]


def as_point(p: PointLike) -> Point2:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidInputError(f"non-finite coordinate in {p!r}")
    return Point2(x, y)


def dist(a: PointLike, b: PointLike) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def cross(o: PointLike, a: PointLike, b: PointLike) -> float:
    """z-component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lerp(a: PointLike, b: PointLike, t: float) -> Point2:
    return Point2(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def angle_of(origin: PointLike, p: PointLike) -> float:
    return math.atan2(p[1] - origin[1], p[0] - origin[0])


def polyline_length(points: Sequence[PointLike]) -> float:
    return sum(dist(points[k], points[k + 1]) for k in range(len(points) - 1))


def point_segment_distance(p: PointLike, a: PointLike, b: PointLike) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    den = dx * dx + dy * dy
    if den == 0.0:
        return dist(p, a)
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / den
    t = min(1.0, max(0.0, t))
    return math.hypot(a[0] + t * dx - p[0], a[1] + t * dy - p[1])


def _ccw_delta(a: float, b: float) -> float:
    """Counterclockwise sweep from angle a to angle b, in [0, 2pi)."""
    d = (b - a) % TAU
    return 0.0 if d >= TAU else d


# --------------------------------------------------------------------------
# disks


@dataclass(frozen=True)
class SensingCircle:
    center: Point2
    radius: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", as_point(self.center))
        r = float(self.radius)
        if not (math.isfinite(r) and r > 0.0):
            raise InvalidInputError(f"sensing radius must be positive, got {self.radius!r}")
        object.__setattr__(self, "radius", r)

    def contains(self, p: PointLike, tol: float = MEMBER_TOL) -> bool:
        return dist(p, self.center) <= self.radius + tol


def segment_disk_interval(a: PointLike, b: PointLike, c: SensingCircle) -> Optional[tuple[float, float]]:
    """Sub-interval [t0, t1] of the parameterisation a + t(b - a), t in [0, 1], inside disk c.

    Returns None when the segment misses the closed disk.  A tangent line (normalised
    discriminant within 1e-12 of zero) yields the degenerate interval [t, t].
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    seg_len = math.hypot(dx, dy)
    if seg_len == 0.0:
        raise InvalidInputError("degenerate segment: a == b")
    ux, uy = dx / seg_len, dy / seg_len
    fx, fy = a[0] - c.center[0], a[1] - c.center[1]
    foot = -(fx * ux + fy * uy)  # arclength of the centre's foot point
    h = fx * uy - fy * ux  # signed distance from centre to the line
    q = 1.0 - (h / c.radius) ** 2
    if q < -TANGENT_TOL:
        return None
    half = 0.0 if q < TANGENT_TOL else c.radius * math.sqrt(q)
    t0 = (foot - half) / seg_len
    t1 = (foot + half) / seg_len
    # endpoints sitting on the circle must not be lost to rounding
    pad = TANGENT_TOL * max(1.0, c.radius) / seg_len
    if t1 < -pad or t0 > 1.0 + pad:
        return None
    return min(1.0, max(0.0, t0)), max(0.0, min(1.0, t1))


def project_to_disk(p: PointLike, c: SensingCircle) -> Point2:
    d = dist(p, c.center)
    if d <= c.radius:
        return as_point(p)
    s = c.radius / d
    return Point2(c.center[0] + s * (p[0] - c.center[0]), c.center[1] + s * (p[1] - c.center[1]))


# --------------------------------------------------------------------------
# polygons


def signed_area(points: Sequence[PointLike]) -> float:
    s = 0.0
    n = len(points)
    for k in range(n):
        x0, y0 = points[k]
        x1, y1 = points[(k + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def _proper_cross(a, b, c, d) -> bool:
    d1, d2 = cross(a, b, c), cross(a, b, d)
    d3, d4 = cross(c, d, a), cross(c, d, b)
    return ((d1 > 0) != (d2 > 0)) and d1 != 0 and d2 != 0 and ((d3 > 0) != (d4 > 0)) and d3 != 0 and d4 != 0


def segments_intersect(a, b, c, d, tol: float = MEMBER_TOL) -> bool:
    """Closed segments ab and cd share a point (within tol)."""
    if _proper_cross(a, b, c, d):
        return True
    return (
        point_segment_distance(c, a, b) <= tol
        or point_segment_distance(d, a, b) <= tol
        or point_segment_distance(a, c, d) <= tol
        or point_segment_distance(b, c, d) <= tol
    )


def _is_simple(verts: Sequence[Point2]) -> bool:
    n = len(verts)
    edges = [(verts[k], verts[(k + 1) % n]) for k in range(n)]
    for k, (a, b) in enumerate(edges):
        if a == b:
            return False
        for j in range(k + 1, n):
            if j == k + 1 or (k == 0 and j == n - 1):
                continue
            if segments_intersect(a, b, *edges[j], tol=0.0):
                return False
    return True


@dataclass(frozen=True)
class Polygon:
    """Simple polygon with counterclockwise vertex order."""

    vertices: tuple

    def __post_init__(self) -> None:
        verts = tuple(as_point(v) for v in self.vertices)
        if len(verts) < 3:
            raise InvalidInputError("polygon needs at least 3 vertices")
        if signed_area(verts) <= 0.0:
            raise InvalidInputError("polygon vertices must be counterclockwise")
        if not _is_simple(verts):
            raise InvalidInputError("polygon is not simple")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, points: Iterable[PointLike]) -> "Polygon":
        verts = [as_point(p) for p in points]
        if len(verts) >= 3 and signed_area(verts) < 0.0:
            verts.reverse()
        return cls(tuple(verts))

    @property
    def area(self) -> float:
        return signed_area(self.vertices)

    def edges(self) -> list[tuple[Point2, Point2]]:
        v = self.vertices
        return [(v[k], v[(k + 1) % len(v)]) for k in range(len(v))]

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def on_boundary(self, p: PointLike, tol: float = MEMBER_TOL) -> bool:
        return any(point_segment_distance(p, a, b) <= tol for a, b in self.edges())

    def contains_strict(self, p: PointLike, tol: float = MEMBER_TOL) -> bool:
        """True iff p lies in the open interior (boundary points excluded)."""
        x0, y0, x1, y1 = self.bbox()
        if p[0] < x0 - tol or p[0] > x1 + tol or p[1] < y0 - tol or p[1] > y1 + tol:
            return False
        if self.on_boundary(p, tol):
            return False
        inside = False
        for a, b in self.edges():
            if (a.y > p[1]) != (b.y > p[1]):
                xint = a.x + (p[1] - a.y) * (b.x - a.x) / (b.y - a.y)
                if xint > p[0]:
                    inside = not inside
        return inside

    def convex_vertices(self) -> list[Point2]:
        v = self.vertices
        n = len(v)
        return [v[k] for k in range(n) if cross(v[k - 1], v[k], v[(k + 1) % n]) > 0.0]


def segment_enters_interior(a: PointLike, b: PointLike, poly: Polygon, tol: float = MEMBER_TOL) -> bool:
    """True iff the closed segment ab meets the open interior of poly.

    Touching the boundary (grazing a vertex, running along an edge) is allowed.
    """
    x0, y0, x1, y1 = poly.bbox()
    if max(a[0], b[0]) < x0 - tol or min(a[0], b[0]) > x1 + tol:
        return False
    if max(a[1], b[1]) < y0 - tol or min(a[1], b[1]) > y1 + tol:
        return False
    seg_len = dist(a, b)
    if seg_len == 0.0:
        return poly.contains_strict(a, tol)
    ts = [0.0, 1.0]
    for p, q in poly.edges():
        if _proper_cross(a, b, p, q):
            # a transversal crossing counts only if it is not a grazing touch,
            # which _proper_cross already excludes (all four signs strict)
            h1 = abs(cross(a, b, p)) / seg_len
            h2 = abs(cross(a, b, q)) / seg_len
            if h1 > tol and h2 > tol:
                return True
        for v in (p, q):
            if point_segment_distance(v, a, b) <= tol:
                ts.append(((v[0] - a[0]) * (b[0] - a[0]) + (v[1] - a[1]) * (b[1] - a[1])) / seg_len**2)
    ts = sorted(min(1.0, max(0.0, t)) for t in ts)
    for t0, t1 in zip(ts, ts[1:]):
        if (t1 - t0) * seg_len <= tol:
            continue
        if poly.contains_strict(lerp(a, b, 0.5 * (t0 + t1)), tol):
            return True
    return False


def segment_clear(a: PointLike, b: PointLike, obstacles: Sequence[Polygon], tol: float = MEMBER_TOL) -> bool:
    """Line of sight between a and b: the segment avoids every obstacle interior."""
    return not any(segment_enters_interior(a, b, poly, tol) for poly in obstacles)


def point_in_obstacles(p: PointLike, obstacles: Sequence[Polygon], tol: float = MEMBER_TOL) -> bool:
    return any(poly.contains_strict(p, tol) for poly in obstacles)


# --------------------------------------------------------------------------
# viewing regions


@dataclass(frozen=True)
class Arc:
    center: Point2
    radius: float
    start: float
    end: float  # start < end, counterclockwise

    def point(self, theta: float) -> Point2:
        return Point2(self.center.x + self.radius * math.cos(theta), self.center.y + self.radius * math.sin(theta))

    def covers_angle(self, theta: float, slack: float = ANGLE_TOL) -> bool:
        return _ccw_delta(self.start - slack, theta) <= (self.end - self.start) + 2 * slack

    @property
    def length(self) -> float:
        return self.radius * (self.end - self.start)


@dataclass(frozen=True)
class LineSegment:
    a: Point2
    b: Point2

    @property
    def length(self) -> float:
        return dist(self.a, self.b)


BoundaryElement = Union[Arc, LineSegment]


@dataclass(frozen=True)
class _Sector:
    start: float
    end: float
    arc: bool  # True: bounded by the range circle; False: by an obstacle edge
    p0: Point2  # boundary point at angle start
    p1: Point2  # boundary point at angle end


@dataclass(frozen=True)
class ViewingRegion:
    """Points within range r of target with an unobstructed line of sight to it.

    The region is star-shaped about the target and stored in polar form as a
    cyclic sequence of angular sectors.
    """

    target: Point2
    radius: float
    sectors: tuple
    boundary: tuple
    area: float

    @property
    def _starts(self) -> list[float]:
        return [s.start for s in self.sectors]

    def _sector_reach(self, k: int, theta: float) -> float:
        s = self.sectors[k]
        if s.arc:
            return self.radius
        if s.p0 == s.p1 and s.p0 == self.target:
            return 0.0
        ux, uy = math.cos(theta), math.sin(theta)
        ex, ey = s.p1.x - s.p0.x, s.p1.y - s.p0.y
        den = ux * ey - uy * ex
        if den == 0.0:
            return min(dist(self.target, s.p0), dist(self.target, s.p1))
        t = ((s.p0.x - self.target.x) * ey - (s.p0.y - self.target.y) * ex) / den
        return max(0.0, min(self.radius, t))

    def _locate(self, theta: float) -> tuple[int, float]:
        base = self.sectors[0].start
        th = base + ((theta - base) % TAU)
        k = bisect_right(self._starts, th) - 1
        return max(0, k), th

    def reach(self, theta: float, slack: float = ANGLE_TOL) -> float:
        """Radial extent of the closed region along direction theta."""
        k, th = self._locate(theta)
        best = self._sector_reach(k, th)
        n = len(self.sectors)
        s = self.sectors[k]
        if th - s.start <= slack:
            best = max(best, self._sector_reach((k - 1) % n, th))
        if s.end - th <= slack:
            best = max(best, self._sector_reach((k + 1) % n, th))
        return best

    def contains(self, p: PointLike, tol: float = MEMBER_TOL) -> bool:
        d = dist(self.target, p)
        if d <= tol:
            return True
        if d > self.radius + tol:
            return False
        theta = angle_of(self.target, p)
        return d <= self.reach(theta, slack=max(ANGLE_TOL, tol / d)) + tol

    def boundary_point(self, theta: float) -> Point2:
        rho = self.reach(theta, slack=0.0)
        return Point2(self.target.x + rho * math.cos(theta), self.target.y + rho * math.sin(theta))

    def outline(self, chord_tol: Optional[float] = None) -> list[Point2]:
        """Closed boundary polyline for rendering; arcs discretised at chord_tol."""
        chord_tol = 1e-4 * self.radius if chord_tol is None else chord_tol
        pts: list[Point2] = []
        # sagitta r(1 - cos(h/2)) <= chord_tol
        step = 2.0 * math.acos(max(-1.0, 1.0 - chord_tol / self.radius))
        for s in self.sectors:
            if s.arc:
                k = max(1, math.ceil((s.end - s.start) / step))
                for j in range(k):
                    th = s.start + (s.end - s.start) * j / k
                    pts.append(Point2(self.target.x + self.radius * math.cos(th), self.target.y + self.radius * math.sin(th)))
                pts.append(s.p1)
            else:
                pts.extend((s.p0, s.p1))
        out = [pts[0]]
        for p in pts[1:]:
            if dist(p, out[-1]) > 1e-12:
                out.append(p)
        return out

    def contains_obstacle_vertex(self, obstacles: Sequence[Polygon], tol: float = MEMBER_TOL) -> bool:
        return any(self.contains(v, tol) for poly in obstacles for v in poly.vertices)


def _ray_hit(T: Point2, ux: float, uy: float, a: Point2, b: Point2) -> Optional[float]:
    ex, ey = b.x - a.x, b.y - a.y
    den = ux * ey - uy * ex
    if den == 0.0:
        return None
    wx, wy = a.x - T.x, a.y - T.y
    t = (wx * ey - wy * ex) / den
    s = (wx * uy - wy * ux) / den
    if s < -1e-12 or s > 1.0 + 1e-12:
        return None
    return t


def _direction_blocked(T: Point2, u: tuple[float, float], obstacles: Sequence[Polygon], tol: float) -> bool:
    """Whether the ray from T (on some obstacle boundary) immediately enters an interior."""
    for poly in obstacles:
        v = poly.vertices
        n = len(v)
        for k in range(n):
            if dist(T, v[k]) <= tol:
                nxt, prv = v[(k + 1) % n], v[k - 1]
                e1 = math.atan2(nxt.y - v[k].y, nxt.x - v[k].x)
                e2 = math.atan2(prv.y - v[k].y, prv.x - v[k].x)
                th = math.atan2(u[1], u[0])
                if 0.0 < _ccw_delta(e1, th) < _ccw_delta(e1, e2):
                    return True
                break
        else:
            for a, b in poly.edges():
                if point_segment_distance(T, a, b) <= tol:
                    if (b.x - a.x) * u[1] - (b.y - a.y) * u[0] > 0.0:
                        return True
    return False


def _circle_line_params(T: Point2, r: float, a: Point2, b: Point2) -> list[float]:
    dx, dy = b.x - a.x, b.y - a.y
    A = dx * dx + dy * dy
    if A == 0.0:
        return []
    fx, fy = a.x - T.x, a.y - T.y
    B = 2.0 * (fx * dx + fy * dy)
    C = fx * fx + fy * fy - r * r
    disc = B * B - 4.0 * A * C
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    return [(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)]


def visibility_region(target: PointLike, obstacles: Sequence[Polygon], r: float) -> ViewingRegion:
    """Range-limited visibility region of target among polygonal obstacles (rotational sweep)."""
    T = as_point(target)
    r = float(r)
    if not (math.isfinite(r) and r > 0.0):
        raise InvalidInputError(f"sensing radius must be positive, got {r!r}")
    tol = MEMBER_TOL * max(1.0, r)
    for poly in obstacles:
        if poly.contains_strict(T):
            raise InvalidInputError(f"target {tuple(T)} lies inside an obstacle")

    edges = [(a, b) for poly in obstacles for a, b in poly.edges() if point_segment_distance(T, a, b) <= r + tol]
    events: list[float] = []
    for a, b in edges:
        on_edge = point_segment_distance(T, a, b) <= tol
        for v in (a, b):
            d = dist(T, v)
            if d > tol and (d <= r or on_edge):
                events.append(angle_of(T, v))
        for t in _circle_line_params(T, r, a, b):
            if -1e-12 <= t <= 1.0 + 1e-12:
                events.append(angle_of(T, lerp(a, b, t)))
    for k in range(len(edges)):
        for j in range(k + 1, len(edges)):
            (a, b), (c, d) = edges[k], edges[j]
            if _proper_cross(a, b, c, d):
                den = cross((0, 0), (b.x - a.x, b.y - a.y), (d.x - c.x, d.y - c.y))
                t = cross((0, 0), (c.x - a.x, c.y - a.y), (d.x - c.x, d.y - c.y)) / den
                x = lerp(a, b, t)
                if tol < dist(T, x) <= r:
                    events.append(angle_of(T, x))

    events = sorted(e % TAU for e in events)
    merged: list[float] = []
    for e in events:
        if not merged or e - merged[-1] > ANGLE_TOL:
            merged.append(e)
    if len(merged) > 1 and merged[0] + TAU - merged[-1] <= ANGLE_TOL:
        merged.pop()
    if not merged:
        merged = [0.0]

    bounds = merged + [merged[0] + TAU]
    pieces: list[tuple[float, float]] = []
    for lo, hi in zip(bounds, bounds[1:]):
        k = max(1, math.ceil((hi - lo) / (0.5 * math.pi) - 1e-12))
        for j in range(k):
            pieces.append((lo + (hi - lo) * j / k, lo + (hi - lo) * (j + 1) / k))

    sectors: list[_Sector] = []
    area = 0.0
    for lo, hi in pieces:
        mid = 0.5 * (lo + hi)
        u = (math.cos(mid), math.sin(mid))
        if edges and _direction_blocked(T, u, obstacles, tol):
            sectors.append(_Sector(lo, hi, False, T, T))
            continue
        best_t, best_edge = math.inf, None
        for a, b in edges:
            t = _ray_hit(T, u[0], u[1], a, b)
            if t is not None and tol < t < best_t:
                best_t, best_edge = t, (a, b)
        if best_edge is None or best_t >= r - tol:
            sectors.append(
                _Sector(lo, hi, True, Point2(T.x + r * math.cos(lo), T.y + r * math.sin(lo)),
                        Point2(T.x + r * math.cos(hi), T.y + r * math.sin(hi)))
            )
            area += 0.5 * r * r * (hi - lo)
            continue
        a, b = best_edge
        ends = []
        for th in (lo, hi):
            ux, uy = math.cos(th), math.sin(th)
            t = _line_hit(T, ux, uy, a, b)
            t = best_t if t is None else min(r, max(0.0, t))
            ends.append(Point2(T.x + t * ux, T.y + t * uy))
        sectors.append(_Sector(lo, hi, False, ends[0], ends[1]))
        area += 0.5 * abs(cross(T, ends[0], ends[1]))

    boundary: list[BoundaryElement] = []
    for k, s in enumerate(sectors):
        prev = sectors[k - 1]
        if dist(prev.p1, s.p0) > 1e-12:
            boundary.append(LineSegment(prev.p1, s.p0))
        if s.arc:
            boundary.append(Arc(T, r, s.start, s.end))
        elif dist(s.p0, s.p1) > 1e-12:
            boundary.append(LineSegment(s.p0, s.p1))
    return ViewingRegion(T, r, tuple(sectors), tuple(boundary), area)


def _line_hit(T: Point2, ux: float, uy: float, a: Point2, b: Point2) -> Optional[float]:
    ex, ey = b.x - a.x, b.y - a.y
    den = ux * ey - uy * ex
    if abs(den) < 1e-15:
        return None
    return ((a.x - T.x) * ey - (a.y - T.y) * ex) / den


def disk_region(c: SensingCircle) -> ViewingRegion:
    return visibility_region(c.center, (), c.radius)


# --------------------------------------------------------------------------
# region overlap


def _seg_arc_params(a: Point2, b: Point2, arc: Arc, tol: float) -> list[float]:
    """Parameters t in [0, 1] where segment ab meets arc."""
    out = []
    dx, dy = b.x - a.x, b.y - a.y
    A = dx * dx + dy * dy
    if A == 0.0:
        if abs(dist(a, arc.center) - arc.radius) <= tol and arc.covers_angle(angle_of(arc.center, a)):
            out.append(0.0)
        return out
    fx, fy = a.x - arc.center.x, a.y - arc.center.y
    B = 2.0 * (fx * dx + fy * dy)
    C = fx * fx + fy * fy - arc.radius**2
    disc = B * B - 4.0 * A * C
    seg_len = math.sqrt(A)
    # allow near-tangency: distance from centre to line within tol of the radius
    if disc < 0.0:
        h = abs(fx * dy - fy * dx) / seg_len
        if h - arc.radius > tol:
            return out
        disc = 0.0
    sq = math.sqrt(disc)
    for t in ((-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)):
        slack_t = tol / seg_len
        if -slack_t <= t <= 1.0 + slack_t:
            p = lerp(a, b, t)
            if arc.covers_angle(angle_of(arc.center, p), slack=max(ANGLE_TOL, tol / arc.radius)):
                out.append(min(1.0, max(0.0, t)))
    return out


def _arcs_meet(e: Arc, f: Arc, tol: float) -> bool:
    d = dist(e.center, f.center)
    if d <= tol:
        if abs(e.radius - f.radius) > tol:
            return False
        return e.covers_angle(f.start) or e.covers_angle(f.end) or f.covers_angle(e.start)
    if d > e.radius + f.radius + tol or d < abs(e.radius - f.radius) - tol:
        return False
    a = (e.radius**2 - f.radius**2 + d * d) / (2.0 * d)
    h = math.sqrt(max(0.0, e.radius**2 - a * a))
    mx = e.center.x + a * (f.center.x - e.center.x) / d
    my = e.center.y + a * (f.center.y - e.center.y) / d
    ox, oy = -(f.center.y - e.center.y) / d * h, (f.center.x - e.center.x) / d * h
    for p in (Point2(mx + ox, my + oy), Point2(mx - ox, my - oy)):
        if e.covers_angle(angle_of(e.center, p), max(ANGLE_TOL, tol / e.radius)) and f.covers_angle(
            angle_of(f.center, p), max(ANGLE_TOL, tol / f.radius)
        ):
            return True
    return False


def _elements_meet(e: BoundaryElement, f: BoundaryElement, tol: float) -> bool:
    if isinstance(e, LineSegment) and isinstance(f, LineSegment):
        return segments_intersect(e.a, e.b, f.a, f.b, tol)
    if isinstance(e, Arc) and isinstance(f, Arc):
        return _arcs_meet(e, f, tol)
    seg, arc = (e, f) if isinstance(e, LineSegment) else (f, e)
    return bool(_seg_arc_params(seg.a, seg.b, arc, tol))


RegionLike = Union[ViewingRegion, SensingCircle]


def _as_region(u: RegionLike) -> ViewingRegion:
    return disk_region(u) if isinstance(u, SensingCircle) else u


def regions_disjoint(u: RegionLike, v: RegionLike, tol: float = MEMBER_TOL) -> bool:
    """True iff the two closed regions have empty intersection (touching counts as meeting)."""
    cu = u.center if isinstance(u, SensingCircle) else u.target
    cv = v.center if isinstance(v, SensingCircle) else v.target
    d = dist(cu, cv)
    if d > u.radius + v.radius + tol:
        return True
    if isinstance(u, SensingCircle) and isinstance(v, SensingCircle):
        return False
    ru, rv = _as_region(u), _as_region(v)
    if ru.contains(rv.target, tol) or rv.contains(ru.target, tol):
        return False
    for e in ru.boundary:
        for f in rv.boundary:
            if _elements_meet(e, f, tol):
                return False
    return True


def segment_region_intervals(a: PointLike, b: PointLike, region: RegionLike, tol: float = MEMBER_TOL) -> list[tuple[float, float]]:
    """Maximal parameter intervals of segment ab (t in [0, 1]) lying inside region."""
    a, b = as_point(a), as_point(b)
    if isinstance(region, SensingCircle):
        iv = segment_disk_interval(a, b, region)
        return [] if iv is None else [iv]
    seg_len = dist(a, b)
    if seg_len == 0.0:
        raise InvalidInputError("degenerate segment: a == b")
    ts = {0.0, 1.0}
    for e in region.boundary:
        if isinstance(e, Arc):
            ts.update(_seg_arc_params(a, b, e, tol))
        else:
            ts.update(segment_meeting_params(a, b, e.a, e.b, tol))
    ts = sorted(ts)
    out: list[list[float]] = []
    prev_in = False
    for k, t in enumerate(ts):
        if k > 0:
            mid_in = region.contains(lerp(a, b, 0.5 * (ts[k - 1] + t)), tol)
            if mid_in and prev_in:
                out[-1][1] = t
            elif mid_in:
                out.append([ts[k - 1], t])
            prev_in = mid_in
            if mid_in:
                continue
        here = region.contains(lerp(a, b, t), tol)
        if here and not (out and out[-1][1] == t):
            out.append([t, t])
        prev_in = here
    return [(lo, hi) for lo, hi in out]


def segment_meeting_params(a: Point2, b: Point2, c: Point2, d: Point2, tol: float) -> list[float]:
    """Parameters on ab of its meeting points with cd (endpoints of any collinear overlap)."""
    seg_len2 = (b.x - a.x) ** 2 + (b.y - a.y) ** 2
    out = []
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    den = rx * sy - ry * sx
    if den != 0.0:
        t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / den
        s = ((c.x - a.x) * ry - (c.y - a.y) * rx) / den
        seg_cd = math.hypot(sx, sy)
        if -tol / math.sqrt(seg_len2) <= t <= 1 + tol / math.sqrt(seg_len2) and -tol / max(seg_cd, 1e-300) <= s <= 1 + tol / max(seg_cd, 1e-300):
            out.append(min(1.0, max(0.0, t)))
    for v in (c, d):
        if point_segment_distance(v, a, b) <= tol:
            out.append(min(1.0, max(0.0, ((v.x - a.x) * rx + (v.y - a.y) * ry) / seg_len2)))
    return out
