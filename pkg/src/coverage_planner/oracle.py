"""Exact and brute-force reference solvers, used to check the planners.

None of these share code paths with the algorithms they check beyond the
problem data types: the TSP oracle enumerates orders, the coverage oracle
enumerates orders and solves each fixed-order subproblem, the sequence oracle
is a dense dynamic programme over sampled points, and the shortest-path oracle
is a Dijkstra search on a fine grid with geometry tests delegated to shapely.
"""

from __future__ import annotations

import itertools
import math
import time
import warnings
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from .convex_path import Disk, FixedPoint, Segment, optimize_sequence
from .errors import CapacityError, InvalidInputError, PreconditionError
from .free_planner import interiors_overlap
from .geometry import Point2, Polygon, SensingCircle, as_point
from .graph_core import as_weight_matrix, euclidean_matrix
from .hoogeveen import hoogeveen_order
from .node_reduction import OverlapInterval
from .scenario import Scenario

TSP_CAP = 9
COVER_CAP = 9
PIERCING_CAP = 20


@dataclass
class OracleResult:
    value: float
    structure: Any
    enumerated: int
    wall_time: float
    info: dict = field(default_factory=dict)


# --------------------------------------------------------------------------
# S-to-T travelling salesman path


def exact_st_tsp(metric, s: int, t: int, *, positions: bool = False) -> OracleResult:
    """Shortest Hamiltonian path from s to t by depth-first enumeration with length pruning."""
    t0 = time.perf_counter()
    w = euclidean_matrix(metric) if positions else as_weight_matrix(metric)
    n = w.shape[0]
    if n > TSP_CAP:
        raise CapacityError(f"exact TSP oracle handles n <= {TSP_CAP}, got {n}")
    if not (0 <= s < n and 0 <= t < n) or s == t:
        raise InvalidInputError("s and t must be distinct valid indices")
    middle = [k for k in range(n) if k not in (s, t)]
    best = [math.inf, None]
    count = [0]

    def extend(path: list[int], rest: list[int], length: float) -> None:
        if length >= best[0]:
            return
        if not rest:
            count[0] += 1
            total = length + w[path[-1], t]
            if total < best[0]:
                best[0], best[1] = total, tuple(path + [t])
            return
        for k in range(len(rest)):
            v = rest[k]
            extend(path + [v], rest[:k] + rest[k + 1:], length + w[path[-1], v])

    extend([s], middle, 0.0)
    return OracleResult(float(best[0]), best[1], count[0], time.perf_counter() - t0)


# --------------------------------------------------------------------------
# coverage path with one sensing node per target


def _fixed_order_regions(scn: Scenario, order: Sequence[int]) -> list:
    return [FixedPoint(scn.targets[order[0]])] + [Disk(SensingCircle(scn.targets[j], scn.r)) for j in order[1:]]


def _solve(regions, initial):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        return optimize_sequence(regions, initial=initial)


def exact_cover_p1(scn: Scenario, *, allow_overlap: bool = False, prune_slack: float = 1e-7) -> OracleResult:
    """Optimal one-node-per-target coverage path over all visiting orders.

    Orders are explored depth first from s.  Deleting the unplaced targets from
    any completion of a prefix leaves a feasible path through prefix + [t], so
    the optimum of that shorter sequence bounds every completion from below; a
    prefix is abandoned once this bound exceeds the incumbent by prune_slack
    (relative).  With allow_overlap the circles may overlap, which gives the
    one-node-per-target relaxation of the overlapping-circle problem.
    """
    t0 = time.perf_counter()
    n = scn.n
    if n > COVER_CAP:
        raise CapacityError(f"exact coverage oracle handles n <= {COVER_CAP}, got {n}")
    if not allow_overlap:
        for i in range(n):
            for j in range(i + 1, n):
                if interiors_overlap(scn.targets[i], scn.targets[j], scn.r):
                    raise PreconditionError(f"sensing circles {i} and {j} overlap")
    s, t = scn.start, scn.end
    middle = [k for k in range(n) if k not in (s, t)]
    stats = {"leaves": 0, "solves": 0}

    def solve(order: list[int], initial: list):
        stats["solves"] += 1
        return _solve(_fixed_order_regions(scn, order), initial)

    # incumbent: the order a tour heuristic visits the targets in
    seed_order = list(hoogeveen_order(scn.targets, s, t, positions=True).order)
    first = solve(seed_order, [scn.targets[j] for j in seed_order])
    best = {"value": first.length, "order": tuple(seed_order), "positions": list(first.positions)}

    def extend(order: list[int], positions: list, rest: list[int]) -> None:
        children = []
        for k, v in enumerate(rest):
            pre = order + [v]
            res = solve(pre + [t], positions + [scn.targets[v], positions[-1]])
            if not rest[:k] + rest[k + 1:]:
                stats["leaves"] += 1
                if res.length < best["value"]:
                    best.update(value=res.length, order=tuple(pre + [t]), positions=list(res.positions))
                continue
            children.append((res.length, k, v, list(res.positions[:-1])))
        for bound, k, v, pos in sorted(children):
            if bound > best["value"] * (1.0 + prune_slack):
                break
            extend(order + [v], pos, rest[:k] + rest[k + 1:])

    if middle:
        extend([s], [scn.targets[s]], middle)
    else:
        stats["leaves"] = 1
    return OracleResult(
        best["value"], best["order"], stats["leaves"], time.perf_counter() - t0,
        {"positions": best["positions"], "solves": stats["solves"]},
    )


# --------------------------------------------------------------------------
# interval piercing


def optimal_interval_piercing(intervals: Sequence) -> OracleResult:
    """Smallest set of points meeting every closed interval, by exhaustive search.

    Some optimal solution uses only right endpoints, so subsets of those are tried
    in order of increasing size.
    """
    t0 = time.perf_counter()
    ivs = [(iv.a, iv.b) if isinstance(iv, OverlapInterval) else (float(iv[0]), float(iv[1])) for iv in intervals]
    if len(ivs) > PIERCING_CAP:
        raise CapacityError(f"piercing oracle handles at most {PIERCING_CAP} intervals, got {len(ivs)}")
    for a, b in ivs:
        if a > b:
            raise InvalidInputError(f"interval [{a}, {b}] is reversed")
    if not ivs:
        return OracleResult(0, (), 0, time.perf_counter() - t0)
    cands = sorted({b for _, b in ivs})
    tried = 0
    for size in range(1, len(cands) + 1):
        for pts in itertools.combinations(cands, size):
            tried += 1
            if all(any(a <= p <= b for p in pts) for a, b in ivs):
                return OracleResult(size, pts, tried, time.perf_counter() - t0)
    raise AssertionError("right endpoints always pierce every interval")


# --------------------------------------------------------------------------
# subtour elimination constraint count


@dataclass(frozen=True)
class SubtourCount:
    value: int  # direct summation over subset sizes 3 .. n - 1 of the n - 2 intermediate nodes
    closed_form: int  # 2^(n-1) - (n-1)(n-2)/2 - 1
    discrepancy: bool

    def __int__(self) -> int:
        return self.value


def subtour_constraint_count(n: int) -> SubtourCount:
    if n < 3:
        raise InvalidInputError(f"need n >= 3, got {n}")
    value = sum(math.comb(n - 2, k) for k in range(3, n))
    closed = 2 ** (n - 1) - (n - 1) * (n - 2) // 2 - 1
    return SubtourCount(value, closed, value != closed)


# --------------------------------------------------------------------------
# dense grid dynamic programme for a fixed region sequence


def _region_samples(reg, k: int) -> np.ndarray:
    if isinstance(reg, FixedPoint):
        return np.array([[reg.p.x, reg.p.y]])
    if isinstance(reg, Segment):
        ts = np.linspace(0.0, 1.0, k)
        return np.array([[reg.a.x, reg.a.y]]) + ts[:, None] * np.array([[reg.b.x - reg.a.x, reg.b.y - reg.a.y]])
    if isinstance(reg, Disk):
        c, r = reg.circle.center, reg.circle.radius
        m = max(4, int(math.sqrt(k)))
        xs = np.linspace(-r, r, m)
        gx, gy = np.meshgrid(xs, xs)
        inner = np.stack([gx.ravel(), gy.ravel()], axis=1)
        inner = inner[np.hypot(inner[:, 0], inner[:, 1]) <= r]
        ang = np.linspace(0.0, 2.0 * math.pi, k, endpoint=False)
        rim = r * np.stack([np.cos(ang), np.sin(ang)], axis=1)
        return np.vstack([inner, rim]) + np.array([c.x, c.y])
    raise InvalidInputError(f"unsupported region {reg!r}")


def _local_samples(reg, centre: np.ndarray, h: float, g: int) -> np.ndarray:
    if isinstance(reg, FixedPoint):
        return np.array([[reg.p.x, reg.p.y]])
    if isinstance(reg, Segment):
        a = np.array([reg.a.x, reg.a.y])
        d = np.array([reg.b.x - reg.a.x, reg.b.y - reg.a.y])
        L = float(np.hypot(*d))
        t_c = float(np.dot(centre - a, d) / (L * L))
        ts = np.clip(t_c + np.linspace(-h, h, g) / L, 0.0, 1.0)
        return a + ts[:, None] * d
    c = np.array([reg.circle.center.x, reg.circle.center.y])
    r = reg.circle.radius
    offs = np.linspace(-h, h, g)
    gx, gy = np.meshgrid(offs, offs)
    pts = centre + np.stack([gx.ravel(), gy.ravel()], axis=1)
    v = pts - c
    d = np.hypot(v[:, 0], v[:, 1])
    far = d > r
    pts[far] = c + v[far] * (r / d[far])[:, None]
    return pts


def _dp(layers: list[np.ndarray]) -> tuple[float, list[np.ndarray]]:
    cost = np.zeros(len(layers[0]))
    back = []
    for prev, cur in zip(layers, layers[1:]):
        d = np.hypot(cur[:, None, 0] - prev[None, :, 0], cur[:, None, 1] - prev[None, :, 1])
        tot = d + cost[None, :]
        arg = np.argmin(tot, axis=1)
        cost = tot[np.arange(len(cur)), arg]
        back.append(arg)
    k = int(np.argmin(cost))
    idx = [k]
    for arg in reversed(back):
        idx.append(int(arg[idx[-1]]))
    idx.reverse()
    return float(cost[k]), [layers[j][idx[j]] for j in range(len(layers))]


def grid_sequence_oracle(regions: Sequence, *, samples: int = 400, rounds: int = 30, local: int = 15) -> OracleResult:
    """Shortest path through the region sequence by sampled dynamic programming with local refinement.

    A coarse pass samples every region; each refinement re-samples a shrinking
    window around the previous choice, with out-of-region samples projected back.
    """
    t0 = time.perf_counter()
    layers = [_region_samples(reg, samples) for reg in regions]
    value, pts = _dp(layers)
    scale = max([reg.circle.radius for reg in regions if isinstance(reg, Disk)] + [1.0])
    h = 2.0 * scale / max(4, int(math.sqrt(samples)))
    for _ in range(rounds):
        layers = [_local_samples(reg, p, h, local) for reg, p in zip(regions, pts)]
        for j, p in enumerate(pts):
            layers[j] = np.vstack([layers[j], p[None, :]])
        value, pts = _dp(layers)
        h *= 0.5
    return OracleResult(value, [Point2(float(p[0]), float(p[1])) for p in pts], len(regions), time.perf_counter() - t0)


# --------------------------------------------------------------------------
# grid shortest paths among obstacles


def _directions(k: int) -> list[tuple[int, int]]:
    """Primitive integer steps with max-norm <= k covering all directions."""
    out = []
    for dx in range(-k, k + 1):
        for dy in range(-k, k + 1):
            if (dx, dy) != (0, 0) and math.gcd(abs(dx), abs(dy)) == 1:
                out.append((dx, dy))
    return out


def grid_shortest_paths(points: Sequence, obstacles: Sequence[Polygon], *, spacing: float, reach: int = 4) -> np.ndarray:
    """Pairwise shortest obstacle-avoiding lengths on a lattice graph (an upper bound on the true lengths).

    Lattice moves use the primitive integer steps of max-norm up to reach (32
    directions for reach 4); each query point is joined to the lattice nodes
    it sees within the same range.  Line-of-sight tests use shapely.
    """
    import shapely
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import dijkstra

    pts = [as_point(p) for p in points]
    obst = shapely.union_all([shapely.Polygon(o.vertices) for o in obstacles]) if obstacles else None
    xs = [p.x for p in pts] + [v.x for o in obstacles for v in o.vertices]
    ys = [p.y for p in pts] + [v.y for o in obstacles for v in o.vertices]
    pad = 2.0 * spacing * reach
    x0, y0 = min(xs) - pad, min(ys) - pad
    nx = int(math.ceil((max(xs) + pad - x0) / spacing)) + 1
    ny = int(math.ceil((max(ys) + pad - y0) / spacing)) + 1
    gx, gy = np.meshgrid(np.arange(nx), np.arange(ny), indexing="ij")
    coords = np.stack([x0 + gx.ravel() * spacing, y0 + gy.ravel() * spacing], axis=1)
    n_grid = len(coords)

    def clear(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if obst is None:
            return np.ones(len(a), dtype=bool)
        lines = shapely.linestrings(np.stack([a, b], axis=1))
        return ~shapely.relate_pattern(lines, obst, "T********")

    rows, cols, wts = [], [], []
    ii, jj = gx.ravel(), gy.ravel()
    for dx, dy in _directions(reach):
        if (dx, dy) < (0, 0):
            continue  # each undirected move once
        ok = (ii + dx >= 0) & (ii + dx < nx) & (jj + dy >= 0) & (jj + dy < ny)
        src = np.nonzero(ok)[0]
        dst = (ii[src] + dx) * ny + (jj[src] + dy)
        vis = clear(coords[src], coords[dst])
        rows.append(src[vis])
        cols.append(dst[vis])
        wts.append(np.full(int(vis.sum()), spacing * math.hypot(dx, dy)))
    for k, p in enumerate(pts):
        pi = np.array([p.x, p.y])
        near = np.nonzero(np.max(np.abs(coords - pi), axis=1) <= reach * spacing)[0]
        vis = clear(np.repeat(pi[None, :], len(near), axis=0), coords[near])
        near = near[vis]
        rows.append(np.full(len(near), n_grid + k))
        cols.append(near)
        wts.append(np.hypot(*(coords[near] - pi).T))
    rows, cols, wts = np.concatenate(rows), np.concatenate(cols), np.concatenate(wts)
    size = n_grid + len(pts)
    g = coo_matrix((wts, (rows, cols)), shape=(size, size)).tocsr()
    d = dijkstra(g, directed=False, indices=list(range(n_grid, size)))
    out = d[:, n_grid:]
    # a direct line of sight is exact and may beat the lattice
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            pa, pb = np.array([pts[a]]), np.array([pts[b]])
            if clear(pa, pb)[0]:
                out[a, b] = out[b, a] = min(out[a, b], math.dist(pts[a], pts[b]))
    return out
