"""Coverage paths among polygonal obstacles.

Pipeline: viewing regions, a disjoint base set of regions, initial sensing
nodes on region boundaries, visibility-graph ordering, triangle corridors
around the ordered route, via-point optimisation and node reduction.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from ..convex_path import optimize_sequence
from ..errors import InternalInvariantError
from ..free_planner import _covering_arc_mid, reduced_sensing_path
from ..geometry import Point2, ViewingRegion, dist, regions_disjoint, segment_clear, visibility_region
from ..hoogeveen import hoogeveen_order
from ..node_reduction import overlap_intervals, reduce_nodes
from ..scenario import CoveragePlan, Scenario
from .corridors import Corridor, CorridorSet, Triangulation, build_corridors, corridors_for_route
from .visibility import VisibilityGraph, convex_obstacle_vertices, visibility_metric

BOUNDARY_SAMPLES = 1440
SHRINK = 1.0 - 1e-6

__all__ = [
    "Corridor",
    "CorridorSet",
    "Triangulation",
    "VisibilityGraph",
    "base_set_regions",
    "build_corridors",
    "convex_obstacle_vertices",
    "corridors_for_route",
    "initial_region_nodes",
    "plan_with_obstacles",
    "region_neighbors",
    "viewing_regions",
    "visibility_metric",
]


def viewing_regions(scn: Scenario) -> list[ViewingRegion]:
    return [visibility_region(t, scn.obstacles, scn.r) for t in scn.targets]


def region_neighbors(regions: Sequence[ViewingRegion]) -> list[list[int]]:
    n = len(regions)
    nb: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not regions_disjoint(regions[i], regions[j]):
                nb[i].append(j)
                nb[j].append(i)
    return nb


def base_set_regions(regions: Sequence[ViewingRegion], nb: Optional[list] = None) -> list[int]:
    """Isolated regions first, then greedy in index order, dropping the neighbours of each choice."""
    nb = region_neighbors(regions) if nb is None else nb
    chosen = [i for i in range(len(regions)) if not nb[i]]
    alive = {i for i in range(len(regions)) if nb[i]}
    for i in sorted(alive):
        if i not in alive:
            continue
        chosen.append(i)
        alive.discard(i)
        alive.difference_update(nb[i])
    return sorted(chosen)


def _inside_runs(base: ViewingRegion, other: ViewingRegion, k: int = BOUNDARY_SAMPLES) -> list[tuple[float, float]]:
    """Angular runs (start, width) of the shrunk base boundary lying inside other."""
    step = 2.0 * math.pi / k
    flags = [other.contains(_shrunk(base, j * step)) for j in range(k)]
    if all(flags):
        return [(0.0, 2.0 * math.pi)]
    first_out = flags.index(False)
    runs, j = [], 0
    while j < k:
        idx = (first_out + j) % k
        if flags[idx]:
            length = 0
            while j < k and flags[(first_out + j) % k]:
                length += 1
                j += 1
            runs.append((idx * step, (length - 1) * step))
        else:
            j += 1
    return runs


def _shrunk(region: ViewingRegion, theta: float) -> Point2:
    b = region.boundary_point(theta)
    t = region.target
    return Point2(t.x + SHRINK * (b.x - t.x), t.y + SHRINK * (b.y - t.y))


def initial_region_nodes(scn: Scenario, regions: Sequence[ViewingRegion], base: Sequence[int], nb: list) -> list[Point2]:
    """One node per target chosen from the base regions' boundaries."""
    t = scn.targets
    nodes: list[Optional[Point2]] = [None] * scn.n
    base_set = set(base)
    for i in base:
        at_target = not nb[i] or regions[i].contains_obstacle_vertex(scn.obstacles)
        mids, halves = [], []
        for j in nb[i]:
            runs = _inside_runs(regions[i], regions[j])
            if not runs:
                continue
            start, width = max(runs, key=lambda sw: sw[1])
            mids.append(start + 0.5 * width)
            halves.append(0.5 * width)
            if j not in base_set and nodes[j] is None:
                p = _shrunk(regions[i], start + 0.5 * width)
                if regions[j].contains(p) and regions[i].contains(p):
                    nodes[j] = p
        if at_target or not mids:
            nodes[i] = t[i]
        else:
            p = _shrunk(regions[i], _covering_arc_mid(mids, halves))
            nodes[i] = p if regions[i].contains(p) else t[i]
    for j in range(scn.n):
        if nodes[j] is None:
            nodes[j] = t[j]
    nodes[scn.start] = t[scn.start]
    return nodes


def plan_with_obstacles(scn: Scenario) -> CoveragePlan:
    """Coverage plan whose path avoids every obstacle interior and whose nodes see their targets."""
    if not scn.obstacles:
        plan = reduced_sensing_path(scn.without_obstacles())
        plan.info.update({"obstacle_vertices": 0, "delegated": True})
        return plan
    regions = viewing_regions(scn)
    nb = region_neighbors(regions)
    base = base_set_regions(regions, nb)
    init = initial_region_nodes(scn, regions, base, nb)
    graph = visibility_metric(init, scn.obstacles)
    vo = hoogeveen_order(graph.lengths, scn.start, scn.end)
    cs = build_corridors(vo, init, graph, regions, scn.r, scn.obstacles)
    res = optimize_sequence(cs.regions, initial=cs.initial)
    if res.length > vo.length * (1.0 + 1e-9) + 1e-12:
        raise InternalInvariantError(f"via-point length {res.length} exceeds the ordered route length {vo.length}")
    path = list(res.positions)
    for a, b in zip(path, path[1:]):
        if not segment_clear(a, b, scn.obstacles):
            raise InternalInvariantError(f"path segment {tuple(a)} -> {tuple(b)} enters an obstacle")
    intervals = overlap_intervals(path, regions)
    red = reduce_nodes(intervals, path)
    areas = [regions[i].area for i in base]
    rho_bar = math.sqrt(sum(areas) / len(areas) / math.pi)
    return CoveragePlan(
        nodes=red.points,
        path=path,
        length=res.length,
        order=vo.order,
        assignment=dict(red.assignment),
        info={
            "base_set": base,
            "initial_nodes": init,
            "node_slots": cs.node_slots,
            "pinned_legs": cs.pinned_legs,
            "hoogeveen_length": vo.length,
            "intervals": intervals,
            "arclengths": red.arclengths,
            "sweeps": res.iterations,
            "rho_bar": rho_bar,
            "rho_mean": sum(math.sqrt(a / math.pi) for a in areas) / len(areas),
            "obstacle_vertices": sum(len(o.vertices) for o in scn.obstacles),
            "delegated": False,
        },
    )
