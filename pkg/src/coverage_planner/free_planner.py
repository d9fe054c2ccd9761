"""Coverage paths in free space, for disjoint and for overlapping sensing circles."""

from __future__ import annotations

import math
import random
from typing import Optional, Sequence

from .convex_path import Disk, FixedPoint, optimize_sequence
from .errors import PreconditionError
from .geometry import Point2, SensingCircle, dist
from .hoogeveen import hoogeveen_order
from .node_reduction import overlap_intervals, reduce_nodes
from .scenario import CoveragePlan, Scenario

OVERLAP_TOL = 1e-9


def circles_overlap(p, q, r: float) -> bool:
    """Closed disks of radius r meet (tangency included)."""
    return dist(p, q) <= 2.0 * r * (1.0 + OVERLAP_TOL)


def interiors_overlap(p, q, r: float) -> bool:
    return dist(p, q) < 2.0 * r * (1.0 - OVERLAP_TOL)


def check_disjoint(scn: Scenario) -> None:
    t = scn.targets
    for i in range(scn.n):
        for j in range(i + 1, scn.n):
            if interiors_overlap(t[i], t[j], scn.r):
                raise PreconditionError(
                    f"sensing circles {i} and {j} overlap; use reduced_sensing_path for overlapping circles"
                )


def _optimize_in_order(scn: Scenario, order: Sequence[int], initial: Sequence) -> tuple:
    regions = [FixedPoint(scn.targets[order[0]])] + [Disk(SensingCircle(scn.targets[j], scn.r)) for j in order[1:]]
    return optimize_sequence(regions, initial=list(initial))


def shortest_cover(scn: Scenario) -> CoveragePlan:
    """One sensing node per target: fixed visiting order, then the shortest path through the disks."""
    check_disjoint(scn)
    vo = hoogeveen_order(scn.targets, scn.start, scn.end, positions=True)
    res = _optimize_in_order(scn, vo.order, [scn.targets[j] for j in vo.order])
    nodes = list(res.positions)
    return CoveragePlan(
        nodes=nodes,
        path=list(nodes),
        length=res.length,
        order=vo.order,
        assignment={j: k for k, j in enumerate(vo.order)},
        info={"tsp_length": vo.length, "sweeps": res.iterations, "lower_bound": res.lower_bound},
    )


def _neighbors(scn: Scenario) -> list[list[int]]:
    t, r = scn.targets, scn.r
    return [[j for j in range(scn.n) if j != i and circles_overlap(t[i], t[j], r)] for i in range(scn.n)]


def base_set_circles(scn: Scenario, *, random_order: bool = False, seed: Optional[int] = None) -> list[int]:
    """Disjoint circles, every other circle overlapping one of them.

    Isolated circles come first; the rest are taken in ascending index order
    (or a seeded shuffle), each choice removing its overlapping circles.
    """
    nb = _neighbors(scn)
    chosen = [i for i in range(scn.n) if not nb[i]]
    pool = [i for i in range(scn.n) if nb[i]]
    if random_order:
        random.Random(seed).shuffle(pool)
    alive = set(pool)
    for i in pool:
        if i not in alive:
            continue
        chosen.append(i)
        alive.discard(i)
        alive.difference_update(nb[i])
    return sorted(chosen)


def _covering_arc_mid(angles: Sequence[float], halfwidths: Sequence[float]) -> float:
    """Midpoint of the shortest arc containing the union of arcs [a - h, a + h]."""
    two_pi = 2.0 * math.pi
    starts = [(a - h) % two_pi for a, h in zip(angles, halfwidths)]
    widths = [2.0 * h for h in halfwidths]
    best_gap, gap_end = -1.0, None
    for e in ((s + w) % two_pi for s, w in zip(starts, widths)):
        if any(1e-12 < (e - s) % two_pi < w - 1e-12 for s, w in zip(starts, widths)):
            continue  # this arc end is inside another arc
        gap, end = min(((s - e) % two_pi, s) for s in starts)
        if gap > best_gap:
            best_gap, gap_end = gap, end
    if gap_end is None or best_gap <= 0.0:
        return angles[0]
    return gap_end + 0.5 * (two_pi - best_gap)


def initial_sensing_nodes(scn: Scenario, base: Sequence[int]) -> list[Point2]:
    """One initial node per target, placed from the base circles."""
    t, r = scn.targets, scn.r
    nb = _neighbors(scn)
    nodes: list[Optional[Point2]] = [None] * scn.n
    base_set = set(base)
    for i in base:
        if not nb[i]:
            nodes[i] = t[i]
            continue
        angles, halves = [], []
        for j in nb[i]:
            d = dist(t[i], t[j])
            ang = math.atan2(t[j].y - t[i].y, t[j].x - t[i].x)
            angles.append(ang)
            halves.append(math.acos(min(1.0, d / (2.0 * r))))
            if j not in base_set and nodes[j] is None:
                nodes[j] = Point2(t[i].x + r * math.cos(ang), t[i].y + r * math.sin(ang))
        mid = _covering_arc_mid(angles, halves)
        nodes[i] = Point2(t[i].x + r * math.cos(mid), t[i].y + r * math.sin(mid))
    for j in range(scn.n):
        if nodes[j] is None:
            # every non-base circle overlaps a base circle, so this is unreachable for a valid base set
            nodes[j] = t[j]
    nodes[scn.start] = t[scn.start]
    return nodes


def reduced_sensing_path(scn: Scenario, *, random_order: bool = False, seed: Optional[int] = None) -> CoveragePlan:
    """Base set, perimeter initial nodes, ordering, optimisation and along-path node reduction."""
    base = base_set_circles(scn, random_order=random_order, seed=seed if seed is not None else scn.seed)
    init = initial_sensing_nodes(scn, base)
    vo = hoogeveen_order(init, scn.start, scn.end, positions=True)
    res = _optimize_in_order(scn, vo.order, [init[j] for j in vo.order])
    path = list(res.positions)
    circles = scn.circles()
    intervals = overlap_intervals(path, circles)
    red = reduce_nodes(intervals, path)
    return CoveragePlan(
        nodes=red.points,
        path=path,
        length=res.length,
        order=vo.order,
        assignment=dict(red.assignment),
        info={
            "base_set": base,
            "initial_nodes": init,
            "optimized_nodes": path,
            "arclengths": red.arclengths,
            "intervals": intervals,
            "hoogeveen_length": vo.length,
            "sweeps": res.iterations,
        },
    )
