"""Triangle corridors around an obstacle-avoiding route.

The free space (a padded bounding box minus the obstacles) is triangulated.
Each leg of the route is traced through the triangulation; the triangle
edges it crosses become segment regions for the convex path solver.  Every
pair of consecutive via regions lies inside a common triangle, so any choice
of via points yields a collision-free polyline.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

import shapely
from shapely.geometry import Polygon as ShapelyPolygon
from shapely.geometry import box
from shapely.ops import unary_union

from ..convex_path import FixedPoint, Segment
from ..errors import InternalInvariantError
from ..geometry import (
    MEMBER_TOL,
    Point2,
    Polygon,
    as_point,
    cross,
    dist,
    lerp,
    point_segment_distance,
    segment_meeting_params,
    segment_region_intervals,
    segments_intersect,
)


class Triangulation:
    """Constrained triangulation of a box with polygonal holes."""

    def __init__(self, obstacles: Sequence[Polygon], bounds: tuple[float, float, float, float]):
        domain = box(*bounds)
        if obstacles:
            domain = domain.difference(unary_union([ShapelyPolygon(p.vertices) for p in obstacles]))
        tris = shapely.get_parts(shapely.constrained_delaunay_triangles(domain))
        self.vertices: list[Point2] = []
        index: dict[tuple, int] = {}
        self.triangles: list[tuple[int, int, int]] = []
        for t in tris:
            coords = list(t.exterior.coords)[:3]
            ids = []
            for c in coords:
                key = (float(c[0]), float(c[1]))
                if key not in index:
                    index[key] = len(self.vertices)
                    self.vertices.append(Point2(*key))
                ids.append(index[key])
            a, b, c = ids
            if cross(self.vertices[a], self.vertices[b], self.vertices[c]) < 0.0:
                b, c = c, b
            if cross(self.vertices[a], self.vertices[b], self.vertices[c]) == 0.0:
                continue
            self.triangles.append((a, b, c))
        self.edge_tris: dict[tuple[int, int], list[int]] = {}
        self.vertex_tris: dict[int, list[int]] = {}
        for k, tri in enumerate(self.triangles):
            for e in self.tri_edges(k):
                self.edge_tris.setdefault(e, []).append(k)
            for v in tri:
                self.vertex_tris.setdefault(v, []).append(k)
        self.edges = sorted(self.edge_tris)

    def tri_edges(self, k: int) -> list[tuple[int, int]]:
        a, b, c = self.triangles[k]
        return [tuple(sorted(e)) for e in ((a, b), (b, c), (c, a))]

    def corners(self, k: int) -> tuple[Point2, Point2, Point2]:
        return tuple(self.vertices[v] for v in self.triangles[k])

    def neighbors(self, k: int) -> list[tuple[int, tuple[int, int]]]:
        out = []
        for e in self.tri_edges(k):
            for j in self.edge_tris[e]:
                if j != k:
                    out.append((j, e))
        return out

    def contains(self, k: int, p, tol: float = MEMBER_TOL) -> bool:
        a, b, c = self.corners(k)
        for u, v in ((a, b), (b, c), (c, a)):
            if cross(u, v, p) / max(dist(u, v), 1e-300) < -tol:
                return False
        return True

    def locate(self, p, tol: float = MEMBER_TOL) -> list[int]:
        return [k for k in range(len(self.triangles)) if self.contains(k, p, tol)]

    def shared_edge(self, i: int, j: int) -> Optional[tuple[int, int]]:
        common = set(self.tri_edges(i)) & set(self.tri_edges(j))
        return min(common) if common else None

    def edge_points(self, e: tuple[int, int]) -> tuple[Point2, Point2]:
        return self.vertices[e[0]], self.vertices[e[1]]

    def dual_path(self, src: int, dst: int, allowed: Optional[set] = None) -> Optional[list[int]]:
        """Fewest-crossings triangle path from src to dst (optionally within allowed)."""
        prev = {src: src}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == dst:
                break
            for v, _ in self.neighbors(u):
                if v not in prev and (allowed is None or v in allowed):
                    prev[v] = u
                    queue.append(v)
        if dst not in prev:
            return None
        out = [dst]
        while out[-1] != src:
            out.append(prev[out[-1]])
        return out[::-1]


@dataclass
class Crossing:
    edge: tuple[int, int]
    point: Point2


@dataclass
class Corridor:
    """Triangles met by one leg, the edges crossed between them, and its end segments."""

    triangles: list
    crossings: list
    entry: object
    exit: object


@dataclass
class CorridorSet:
    triangulation: Triangulation
    corridors: list
    regions: list  # via regions for the convex path solver
    initial: list  # starting via points (a sub-polyline of the route)
    node_slots: list = field(default_factory=list)  # index into regions of each sensing node's segment
    pinned_legs: list = field(default_factory=list)


def _pick_triangle(tri: Triangulation, p: Point2, a: Point2, b: Point2) -> int:
    cands = tri.locate(p)
    if not cands:
        raise InternalInvariantError(f"route point {tuple(p)} is outside the free-space triangulation")
    if len(cands) == 1:
        return cands[0]
    # on an edge: prefer the side to the left of travel, then the right
    L = dist(a, b)
    nx, ny = -(b.y - a.y) / L, (b.x - a.x) / L
    eps = 1e-7 * max(1.0, L)
    for sgn in (1.0, -1.0):
        q = Point2(p.x + sgn * eps * nx, p.y + sgn * eps * ny)
        side = [k for k in cands if tri.contains(k, q, tol=0.0)]
        if side:
            return side[0]
    return cands[0]


def _segment_triangles(tri: Triangulation, a: Point2, b: Point2) -> list[tuple[int, Point2]]:
    """Triangles met by segment ab, each with the point where the segment enters it."""
    ts = {0.0, 1.0}
    scale = max(1.0, dist(a, b))
    for e in tri.edges:
        p, q = tri.edge_points(e)
        ts.update(segment_meeting_params(a, b, p, q, MEMBER_TOL * scale))
    ts = sorted(ts)
    out: list[tuple[int, Point2]] = []
    for t0, t1 in zip(ts, ts[1:]):
        if (t1 - t0) * dist(a, b) <= 1e-12 * scale:
            continue
        k = _pick_triangle(tri, lerp(a, b, 0.5 * (t0 + t1)), a, b)
        if not out or out[-1][0] != k:
            out.append((k, lerp(a, b, t0)))
    return out


def _fan(tri: Triangulation, i: int, j: int, v: int) -> Optional[list[int]]:
    """Triangles around vertex v leading from i to j through edges incident to v."""
    around = set(tri.vertex_tris.get(v, []))
    prev = {i: i}
    queue = deque([i])
    while queue:
        u = queue.popleft()
        if u == j:
            break
        for w, e in tri.neighbors(u):
            if w in around and v in e and w not in prev:
                prev[w] = u
                queue.append(w)
    if j not in prev:
        return None
    out = [j]
    while out[-1] != i:
        out.append(prev[out[-1]])
    return out[::-1]


def _connect(tri: Triangulation, i: int, j: int, x: Point2) -> tuple[list[int], list[Crossing]]:
    """Triangle chain from i to j (exclusive of i) through point x, with the crossings."""
    if i == j:
        return [], []
    e = tri.shared_edge(i, j)
    if e is not None:
        p, q = tri.edge_points(e)
        return [j], [Crossing(e, _project_to_edge(x, p, q))]
    common = set(tri.triangles[i]) & set(tri.triangles[j])
    path = None
    pivot = None
    for v in sorted(common, key=lambda v: dist(tri.vertices[v], x)):
        path = _fan(tri, i, j, v)
        if path is not None:
            pivot = tri.vertices[v]
            break
    if path is None:
        path = tri.dual_path(i, j)
        if path is None:
            raise InternalInvariantError(f"triangles {i} and {j} are not connected in free space")
    chain, crossings = [], []
    for u, w in zip(path, path[1:]):
        e = tri.shared_edge(u, w)
        p, q = tri.edge_points(e)
        pt = pivot if pivot is not None else _project_to_edge(x, p, q)
        chain.append(w)
        crossings.append(Crossing(e, pt))
    return chain, crossings


def _project_to_edge(x: Point2, p: Point2, q: Point2) -> Point2:
    dx, dy = q.x - p.x, q.y - p.y
    t = ((x.x - p.x) * dx + (x.y - p.y) * dy) / (dx * dx + dy * dy)
    return lerp(p, q, min(1.0, max(0.0, t)))


def _trace(tri: Triangulation, start_tri: int, route: Sequence[Point2]) -> tuple[list[int], list[Crossing]]:
    """Triangle chain of a polyline that begins inside start_tri."""
    chain = [start_tri]
    crossings: list[Crossing] = []
    for a, b in zip(route, route[1:]):
        if dist(a, b) == 0.0:
            continue
        for k, entry in _segment_triangles(tri, a, b):
            more, cr = _connect(tri, chain[-1], k, entry)
            chain.extend(more)
            crossings.extend(cr)
    return _cut_loops(chain, crossings)


def _cut_loops(chain: list[int], crossings: list[Crossing]) -> tuple[list[int], list[Crossing]]:
    k = 0
    while k < len(chain):
        last = max(idx for idx, t in enumerate(chain) if t == chain[k])
        if last > k:
            chain = chain[: k + 1] + chain[last + 1:]
            crossings = crossings[:k] + crossings[last:]
        k += 1
    return chain, crossings


def _clip_to_triangle(a: Point2, b: Point2, corners) -> Optional[tuple[float, float]]:
    """Parameter range of segment ab inside the closed triangle (Cyrus-Beck)."""
    lo, hi = 0.0, 1.0
    dx, dy = b.x - a.x, b.y - a.y
    for u, v in zip(corners, corners[1:] + corners[:1]):
        # inside: cross(u, v, p) >= 0
        f0 = cross(u, v, a)
        df = (v.x - u.x) * dy - (v.y - u.y) * dx
        slack = MEMBER_TOL * dist(u, v)
        if df == 0.0:
            if f0 < -slack:
                return None
            continue
        t = (-slack - f0) / df
        if df > 0.0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
    return (lo, hi) if lo <= hi else None


def _clearance(p: Point2, obstacles: Sequence[Polygon]) -> float:
    d = math.inf
    for poly in obstacles:
        for a, b in poly.edges():
            d = min(d, point_segment_distance(p, a, b))
    return d


def _node_segment(
    node: Point2,
    direction: tuple[float, float],
    region,
    corners,
    obstacles: Sequence[Polygon],
    r: float,
):
    """Short segment through the node, across the travel direction, inside its region and triangle."""
    half = min(r, _clearance(node, obstacles))
    L = math.hypot(*direction)
    if half <= 1e-9 * r or L == 0.0:
        return FixedPoint(node)
    nx, ny = -direction[1] / L, direction[0] / L
    a = Point2(node.x - half * nx, node.y - half * ny)
    b = Point2(node.x + half * nx, node.y + half * ny)
    lo, hi = 0.0, 1.0
    ivs = segment_region_intervals(a, b, region)
    hit = [iv for iv in ivs if iv[0] - 1e-9 <= 0.5 <= iv[1] + 1e-9]
    if not hit:
        return FixedPoint(node)
    lo, hi = max(lo, hit[0][0]), min(hi, hit[0][1])
    clip = _clip_to_triangle(a, b, list(corners))
    if clip is None:
        return FixedPoint(node)
    lo, hi = max(lo, clip[0]), min(hi, clip[1])
    if not (lo <= 0.5 <= hi) or (hi - lo) * 2.0 * half <= 1e-9 * r:
        return FixedPoint(node)
    return Segment(lerp(a, b, lo), lerp(a, b, hi))


def _direction_into(route: Sequence[Point2]) -> tuple[float, float]:
    end = route[-1]
    for p in reversed(route[:-1]):
        if dist(p, end) > 0.0:
            return end.x - p.x, end.y - p.y
    return 0.0, 0.0


def domain_bounds(points: Sequence, obstacles: Sequence[Polygon], r: float) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points] + [v.x for o in obstacles for v in o.vertices]
    ys = [p[1] for p in points] + [v.y for o in obstacles for v in o.vertices]
    m = 2.0 * r + 1.0
    return min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m


def _region_endpoints(reg, init: Point2) -> tuple[Point2, Point2]:
    if isinstance(reg, Segment):
        return reg.a, reg.b
    return init, init


def corridors_for_route(
    nodes: Sequence,
    routes: Sequence[Sequence],
    regions: Sequence,
    obstacles: Sequence[Polygon],
    r: float,
    triangulation: Optional[Triangulation] = None,
) -> CorridorSet:
    """Via regions for a route visiting nodes[0], ..., nodes[-1] in order.

    routes[i] is the collision-free polyline from nodes[i] to nodes[i + 1];
    regions[i] is the viewing region nodes[i] must stay inside.
    """
    nodes = [as_point(p) for p in nodes]
    if len(routes) != len(nodes) - 1:
        raise InternalInvariantError("need one route per consecutive node pair")
    pts = list(nodes) + [as_point(q) for rt in routes for q in rt]
    tri = triangulation or Triangulation(obstacles, domain_bounds(pts, obstacles, r))

    cands = tri.locate(nodes[0])
    if not cands:
        raise InternalInvariantError("start node outside the free space")
    first = routes[0] if routes else [nodes[0]]
    marker = _pick_triangle(tri, nodes[0], first[0], first[1]) if len(first) > 1 and dist(first[0], first[1]) > 0 else cands[0]

    corridors: list[Corridor] = []
    markers = [marker]
    for i, rt in enumerate(routes):
        rt = [as_point(q) for q in rt]
        chain, crossings = _trace(tri, markers[-1], rt)
        if not tri.contains(chain[-1], nodes[i + 1]):
            ends = tri.locate(nodes[i + 1])
            if not ends:
                raise InternalInvariantError(f"node {i + 1} outside the free space")
            more, cr = _connect(tri, chain[-1], ends[0], nodes[i + 1])
            chain, crossings = _cut_loops(chain + more, crossings + cr)
        markers.append(chain[-1])
        corridors.append(Corridor(chain, crossings, None, None))

    node_regions = [FixedPoint(nodes[0])]
    for i in range(1, len(nodes)):
        direction = _direction_into([as_point(q) for q in routes[i - 1]])
        if direction == (0.0, 0.0) and i < len(routes):
            out = [as_point(q) for q in routes[i]][::-1]
            d = _direction_into(out)
            direction = (-d[0], -d[1])
        node_regions.append(_node_segment(nodes[i], direction, regions[i], tri.corners(markers[i]), obstacles, r))

    # adjacent node segments that cross each other would let the path skip between regions; pin them
    pinned = []
    for i in range(len(routes)):
        u, v = node_regions[i], node_regions[i + 1]
        if isinstance(u, Segment) and isinstance(v, Segment) and segments_intersect(u.a, u.b, v.a, v.b, 0.0):
            node_regions[i + 1] = FixedPoint(nodes[i + 1])
            pinned.append(i)

    via, init, slots = [node_regions[0]], [nodes[0]], [0]
    for i, cor in enumerate(corridors):
        cor.entry, cor.exit = node_regions[i], node_regions[i + 1]
        for c in cor.crossings:
            if i in pinned:
                via.append(FixedPoint(c.point))
            else:
                p, q = tri.edge_points(c.edge)
                via.append(Segment(p, q))
            init.append(c.point)
        slots.append(len(via))
        via.append(node_regions[i + 1])
        init.append(nodes[i + 1])
    return CorridorSet(tri, corridors, via, init, slots, pinned)


def build_corridors(order, nodes: Sequence, graph, regions: Sequence, r: float, obstacles: Sequence[Polygon] = ()) -> CorridorSet:
    """Corridors for visiting nodes (indexed by target) in the given order along graph shortest paths."""
    seq = tuple(getattr(order, "order", order))
    routes = [graph.polyline(seq[k], seq[k + 1]) for k in range(len(seq) - 1)]
    return corridors_for_route([nodes[j] for j in seq], routes, [regions[j] for j in seq], obstacles, r)
