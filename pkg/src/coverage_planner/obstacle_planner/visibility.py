"""Visibility graph over sensing nodes and convex obstacle vertices."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import InvalidInputError
from ..geometry import Point2, Polygon, as_point, dist, point_in_obstacles, segment_clear


@dataclass
class VisibilityGraph:
    """Nodes 0..k-1 are the sensing nodes; the rest are convex obstacle vertices."""

    points: list
    k: int
    adjacency: dict
    lengths: np.ndarray  # k x k shortest collision-free path lengths
    prev: list = field(default_factory=list)  # per source, predecessor array over all nodes

    def path_indices(self, i: int, j: int) -> list[int]:
        pred = self.prev[i]
        out = [j]
        while out[-1] != i:
            p = pred[out[-1]]
            if p < 0:
                raise InvalidInputError(f"no collision-free path between nodes {i} and {j}")
            out.append(p)
        out.reverse()
        return out

    def polyline(self, i: int, j: int) -> list[Point2]:
        return [self.points[v] for v in self.path_indices(i, j)]


def convex_obstacle_vertices(obstacles: Sequence[Polygon]) -> list[Point2]:
    """Convex vertices not buried inside another obstacle; only these can be bends of shortest paths."""
    out = []
    seen = set()
    for poly in obstacles:
        for v in poly.convex_vertices():
            if v in seen or point_in_obstacles(v, obstacles):
                continue
            seen.add(v)
            out.append(v)
    return out


def _dijkstra(adj: dict, n: int, src: int) -> tuple[list[float], list[int]]:
    d = [math.inf] * n
    pred = [-1] * n
    d[src] = 0.0
    pred[src] = src
    heap = [(0.0, src)]
    while heap:
        du, u = heapq.heappop(heap)
        if du > d[u]:
            continue
        for v, w in adj[u]:
            nd = du + w
            if nd < d[v]:
                d[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
    return d, pred


def visibility_metric(nodes: Sequence, obstacles: Sequence[Polygon]) -> VisibilityGraph:
    """All-pairs shortest obstacle-avoiding paths among the sensing nodes."""
    nodes = [as_point(p) for p in nodes]
    for p in nodes:
        if point_in_obstacles(p, obstacles):
            raise InvalidInputError(f"node {tuple(p)} lies inside an obstacle")
    pts = nodes + [v for v in convex_obstacle_vertices(obstacles) if v not in set(nodes)]
    n = len(pts)
    adj: dict[int, list] = {u: [] for u in range(n)}
    for u in range(n):
        for v in range(u + 1, n):
            if segment_clear(pts[u], pts[v], obstacles):
                w = dist(pts[u], pts[v])
                adj[u].append((v, w))
                adj[v].append((u, w))
    k = len(nodes)
    lengths = np.zeros((k, k))
    prev = []
    for i in range(k):
        d, pred = _dijkstra(adj, n, i)
        if any(math.isinf(d[j]) for j in range(k)):
            raise InvalidInputError(f"sensing node {i} cannot reach every other node")
        lengths[i] = d[:k]
        prev.append(pred)
    lengths = 0.5 * (lengths + lengths.T)
    return VisibilityGraph(pts, k, adj, lengths, prev)
