"""Shortest polyline through an ordered list of convex regions.

Each via point is restricted to a fixed point, a closed disk or a line segment.
The objective (sum of consecutive distances) is convex; it is minimised by
coordinate descent where every single-node step is solved in closed form or by
a safeguarded 1-D search on the disk boundary.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .errors import InvalidInputError
from .geometry import Point2, SensingCircle, as_point, dist, project_to_disk, segment_disk_interval

FEAS_TOL = 1e-9


@dataclass(frozen=True)
class FixedPoint:
    p: Point2

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", as_point(self.p))

    def center(self) -> Point2:
        return self.p

    def contains(self, q, tol: float = FEAS_TOL) -> bool:
        return dist(q, self.p) <= tol

    def project(self, q) -> Point2:
        return self.p


@dataclass(frozen=True)
class Disk:
    circle: SensingCircle

    def center(self) -> Point2:
        return self.circle.center

    def contains(self, q, tol: float = FEAS_TOL) -> bool:
        return self.circle.contains(q, tol)

    def project(self, q) -> Point2:
        return project_to_disk(q, self.circle)


@dataclass(frozen=True)
class Segment:
    a: Point2
    b: Point2

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_point(self.a))
        object.__setattr__(self, "b", as_point(self.b))
        if self.a == self.b:
            raise InvalidInputError("segment region needs distinct endpoints")

    def center(self) -> Point2:
        return Point2(0.5 * (self.a.x + self.b.x), 0.5 * (self.a.y + self.b.y))

    def at(self, t: float) -> Point2:
        return Point2(self.a.x + t * (self.b.x - self.a.x), self.a.y + t * (self.b.y - self.a.y))

    def param(self, q) -> float:
        dx, dy = self.b.x - self.a.x, self.b.y - self.a.y
        return ((q[0] - self.a.x) * dx + (q[1] - self.a.y) * dy) / (dx * dx + dy * dy)

    def contains(self, q, tol: float = FEAS_TOL) -> bool:
        t = min(1.0, max(0.0, self.param(q)))
        return dist(q, self.at(t)) <= tol

    def project(self, q) -> Point2:
        return self.at(min(1.0, max(0.0, self.param(q))))


ConvexRegion = Union[FixedPoint, Disk, Segment]


@dataclass
class ViaSequence:
    regions: list
    positions: list = field(default_factory=list)
    length: float = math.nan
    iterations: int = 0
    residual: float = math.nan
    converged: bool = False
    history: list = field(default_factory=list)
    lower_bound: float = math.nan  # certified lower bound on the optimum

    def feasible(self, tol: float = FEAS_TOL) -> bool:
        return len(self.positions) == len(self.regions) and all(
            reg.contains(p, tol) for reg, p in zip(self.regions, self.positions)
        )


def path_length(points: Sequence) -> float:
    return sum(math.hypot(points[k + 1][0] - points[k][0], points[k + 1][1] - points[k][1]) for k in range(len(points) - 1))


# --------------------------------------------------------------------------
# single-node steps


def _pair_cost(x: float, y: float, p, q) -> float:
    return math.hypot(x - p[0], y - p[1]) + math.hypot(x - q[0], y - q[1])


def _circle_min(p, q, c: SensingCircle, warm: Optional[float] = None) -> Point2:
    """Minimise |S - p| + |S - q| over the circle when segment pq misses the disk.

    Along the arc between the directions of p and q (seen from the centre) the
    angular derivative is negative at p's end and positive at q's end, so the
    minimiser is bracketed; it is found by Illinois regula falsi on the exact
    derivative.
    """
    cx, cy, r = c.center.x, c.center.y, c.radius
    px, py, qx, qy = p[0], p[1], q[0], q[1]

    def g(th: float) -> float:
        ct, st = math.cos(th), math.sin(th)
        sx, sy = cx + r * ct, cy + r * st
        dpx, dpy, dqx, dqy = sx - px, sy - py, sx - qx, sy - qy
        npq = math.hypot(dpx, dpy)
        nq = math.hypot(dqx, dqy)
        gp = (-st * dpx + ct * dpy) / npq if npq > 0.0 else 0.0
        gq = (-st * dqx + ct * dqy) / nq if nq > 0.0 else 0.0
        return r * (gp + gq)

    lo = math.atan2(py - cy, px - cx)
    hi = lo + math.remainder(math.atan2(qy - cy, qx - cx) - lo, 2.0 * math.pi)
    if hi < lo:
        lo, hi = hi, lo
    glo, ghi = g(lo), g(hi)
    if warm is not None and glo < 0.0 < ghi:
        # a previous solution usually sits next to the root: tighten the bracket around it
        w = lo + (warm - lo) % (2.0 * math.pi)
        if lo < w < hi:
            eps = 1e-7 * (hi - lo)
            for t in (max(lo, w - eps), min(hi, w + eps)):
                if lo < t < hi:
                    gt = g(t)
                    if gt < 0.0:
                        lo, glo = t, gt
                    else:
                        hi, ghi = t, gt
    th = 0.5 * (lo + hi)
    if glo >= 0.0 or ghi <= 0.0:
        th = lo if glo >= 0.0 else hi
    else:
        side = 0
        for _ in range(200):
            th = (lo * ghi - hi * glo) / (ghi - glo)
            if not lo < th < hi:
                th = 0.5 * (lo + hi)
            gt = g(th)
            if gt == 0.0:
                break
            if gt < 0.0:
                lo, glo = th, gt
                if side == -1:
                    ghi *= 0.5
                side = -1
            else:
                hi, ghi = th, gt
                if side == 1:
                    glo *= 0.5
                side = 1
            if hi - lo <= 1e-15 * (1.0 + abs(th)):
                break
    return Point2(cx + r * math.cos(th), cy + r * math.sin(th))


def _segment_min(p, q, seg: Segment) -> Point2:
    ax, ay = seg.a
    dx, dy = seg.b.x - ax, seg.b.y - ay
    L2 = dx * dx + dy * dy
    L = math.sqrt(L2)
    tp = ((p[0] - ax) * dx + (p[1] - ay) * dy) / L2
    tq = ((q[0] - ax) * dx + (q[1] - ay) * dy) / L2
    hp = abs((p[0] - ax) * dy - (p[1] - ay) * dx) / L
    hq = abs((q[0] - ax) * dy - (q[1] - ay) * dx) / L
    if hp + hq > 1e-15 * max(1.0, L):
        # crossing point for opposite sides, reflection point for the same side
        t = tp + (tq - tp) * hp / (hp + hq)
    else:
        lo, hi = max(0.0, min(tp, tq)), min(1.0, max(tp, tq))
        t = 0.5 * (lo + hi) if lo <= hi else (0.0 if max(tp, tq) < 0.0 else 1.0)
    return seg.at(min(1.0, max(0.0, t)))


def solve_node_subproblem(prev, next, region: ConvexRegion, warm: Optional[Point2] = None) -> Point2:
    """argmin over region of |S - prev| + |S - next|."""
    if isinstance(region, FixedPoint):
        return region.p
    prev, next = as_point(prev), as_point(next)
    if isinstance(region, Segment):
        return _segment_min(prev, next, region)
    c = region.circle
    if prev == next:
        return project_to_disk(prev, c)
    iv = segment_disk_interval(prev, next, c)
    if iv is not None:
        tm = 0.5 * (iv[0] + iv[1])
        return Point2(prev.x + tm * (next.x - prev.x), prev.y + tm * (next.y - prev.y))
    w = None if warm is None else math.atan2(warm[1] - c.center.y, warm[0] - c.center.x)
    return _circle_min(prev, next, c, w)


# --------------------------------------------------------------------------
# full sequence


def _local(points, k: int) -> float:
    s = 0.0
    if k > 0:
        s += dist(points[k - 1], points[k])
    if k + 1 < len(points):
        s += dist(points[k], points[k + 1])
    return s


STALL_SWEEPS = 200
NEAR_LEG = 1e-3  # relative to the region scale


def _min_leg(pts) -> float:
    return min((dist(pts[k], pts[k + 1]) for k in range(len(pts) - 1)), default=math.inf)


def _sweeps(regions, pts, length, rel_tol, max_sweeps, history, near=None):
    """Alternating forward/backward coordinate passes; returns (length, sweeps, residual, converged).

    With near set, gives up early (unconverged) once STALL_SWEEPS passes have
    run while some leg is shorter than near: progress there is sublinear.
    """
    n = len(regions)
    sweeps = 0
    residual = math.inf
    pair_start = length
    while sweeps < max_sweeps:
        sweeps += 1
        forward = sweeps % 2 == 1
        for k in range(1, n) if forward else range(n - 1, 0, -1):
            reg = regions[k]
            if isinstance(reg, FixedPoint):
                continue
            if k + 1 < n:
                cand = solve_node_subproblem(pts[k - 1], pts[k + 1], reg, pts[k])
            else:
                cand = reg.project(pts[k - 1])
            old = pts[k]
            before = _local(pts, k)
            pts[k] = cand
            if _local(pts, k) > before:
                pts[k] = old
        new_length = path_length(pts)
        if new_length > length + 1e-12 * max(1.0, length):
            raise AssertionError("coordinate sweep increased the path length")
        length = min(length, new_length)
        if history is not None:
            history.append(new_length)
        if forward:
            continue
        # a full sweep is one forward plus one backward pass
        residual = (pair_start - length) / max(pair_start, 1e-300)
        pair_start = length
        if residual < rel_tol:
            return length, sweeps, residual, True
        if near is not None and sweeps % STALL_SWEEPS == 0 and _min_leg(pts) <= near:
            break
    return length, sweeps, residual, False


class _Packed:
    """Array form of a region list for the whole-sequence primal-dual steps."""

    def __init__(self, regions: Sequence[ConvexRegion]):
        n = len(regions)
        self.c = np.zeros((n, 2))
        self.r = np.zeros(n)
        self.a = np.zeros((n, 2))
        self.b = np.zeros((n, 2))
        kind = np.zeros(n, dtype=int)
        for k, reg in enumerate(regions):
            if isinstance(reg, FixedPoint):
                self.c[k] = reg.p
            elif isinstance(reg, Disk):
                kind[k] = 1
                self.c[k] = reg.circle.center
                self.r[k] = reg.circle.radius
            else:
                kind[k] = 2
                self.a[k] = reg.a
                self.b[k] = reg.b
        self.fix, self.disk, self.seg = kind == 0, kind == 1, kind == 2
        self.d = self.b - self.a
        self.dd = np.maximum((self.d**2).sum(1), 1e-300)
        self.scale = max([1e-12] + list(self.r) + list(0.5 * np.sqrt(self.dd[self.seg])))

    def project(self, S: np.ndarray) -> np.ndarray:
        out = S.copy()
        out[self.fix] = self.c[self.fix]
        m = self.disk
        if m.any():
            v = S[m] - self.c[m]
            nv = np.sqrt((v**2).sum(1))
            out[m] = self.c[m] + v * np.minimum(1.0, self.r[m] / np.maximum(nv, 1e-300))[:, None]
        m = self.seg
        if m.any():
            t = np.clip(((S[m] - self.a[m]) * self.d[m]).sum(1) / self.dd[m], 0.0, 1.0)
            out[m] = self.a[m] + t[:, None] * self.d[m]
        return out

    def dual_bound(self, u: np.ndarray) -> float:
        """Lower bound on the optimum from multipliers |u_k| <= 1 on the legs."""
        w = np.zeros((len(self.r), 2))
        w[1:] += u
        w[:-1] -= u
        val = float((self.c[self.fix] * w[self.fix]).sum())
        m = self.disk
        val += float(((self.c[m] * w[m]).sum(1) - self.r[m] * np.sqrt((w[m] ** 2).sum(1))).sum())
        m = self.seg
        val += float(np.minimum((self.a[m] * w[m]).sum(1), (self.b[m] * w[m]).sum(1)).sum())
        return val


def _leg_directions(S: np.ndarray, eps: float) -> np.ndarray:
    d = S[1:] - S[:-1]
    nd = np.sqrt((d**2).sum(1))
    u = np.zeros_like(d)
    ok = nd > eps
    u[ok] = d[ok] / nd[ok][:, None]
    return u


def _has_coincident_legs(S: np.ndarray, scale: float) -> bool:
    """Non-smooth points of the objective: consecutive via points (nearly) coincide."""
    if len(S) < 2:
        return False
    return bool(np.sqrt(((S[1:] - S[:-1]) ** 2).sum(1)).min() <= 1e-6 * scale)


class _PrimalDual:
    """Preconditioned primal-dual hybrid gradient on the whole sequence.

    State persists between calls to run(), so rounds continue one trajectory.
    """

    def __init__(self, pk: _Packed, S: np.ndarray, u: np.ndarray):
        n = len(S)
        self.pk = pk
        self.tau = np.full(n, 0.5)
        self.tau[0] = self.tau[-1] = 1.0
        self.sigma = 0.5
        self.S = pk.project(S)
        self.Sbar = self.S.copy()
        self.u = u.copy()
        self.lower = -math.inf

    def run(self, iters: int) -> None:
        pk, S, Sbar, u = self.pk, self.S, self.Sbar, self.u
        for it in range(iters):
            u = u + self.sigma * (Sbar[1:] - Sbar[:-1])
            u /= np.maximum(1.0, np.sqrt((u**2).sum(1)))[:, None]
            kt = np.zeros_like(S)
            kt[1:] += u
            kt[:-1] -= u
            Sn = pk.project(S - self.tau[:, None] * kt)
            Sbar = 2.0 * Sn - S
            S = Sn
        self.S, self.Sbar, self.u = S, Sbar, u
        self.lower = max(self.lower, pk.dual_bound(u))


def _np_length(S: np.ndarray) -> float:
    return float(np.sqrt(((S[1:] - S[:-1]) ** 2).sum(1)).sum())


def optimize_sequence(
    regions: Union[Sequence[ConvexRegion], ViaSequence],
    initial: Optional[Sequence] = None,
    *,
    rel_tol: float = 1e-10,
    max_sweeps: int = 10_000,
    gap_tol: float = 1e-7,
    max_rounds: int = 60,
    record_history: bool = False,
) -> ViaSequence:
    """Shortest path through the regions in order; the first region must be a fixed point.

    Coordinate sweeps do the work.  A sweep fixed point is optimal wherever the
    objective is smooth, so sweeps can only stall where two consecutive via
    points coincide.  In that case whole-sequence primal-dual rounds run until
    their dual bound closes the gap or they stop finding shorter paths, and the
    sweeps restart from every improvement.
    """
    if isinstance(regions, ViaSequence):
        if initial is None and regions.positions:
            initial = regions.positions
        regions = regions.regions
    regions = list(regions)
    if not regions:
        raise InvalidInputError("empty region sequence")
    if not isinstance(regions[0], FixedPoint):
        raise InvalidInputError("first region must be a fixed point")
    n = len(regions)
    if initial is None:
        pts = [reg.center() for reg in regions]
    else:
        if len(initial) != n:
            raise InvalidInputError("initial positions do not match the region count")
        pts = [reg.project(as_point(p)) for reg, p in zip(regions, initial)]
    out = ViaSequence(regions=regions)
    history = out.history if record_history else None
    length = path_length(pts)
    if history is not None:
        history.append(length)
    pk = _Packed(regions)
    near = NEAR_LEG * pk.scale
    length, sweeps, residual, converged = _sweeps(regions, pts, length, rel_tol, max_sweeps, history, near)

    lower = 0.0
    if n > 1:
        S = np.array(pts, dtype=float)
        u = _leg_directions(S, 1e-12 * pk.scale)
        lower = max(0.0, pk.dual_bound(u))
        pd = None
        rounds = 0
        while (
            (_has_coincident_legs(S, pk.scale) or not converged)
            and length - lower > gap_tol * max(length, pk.scale)
            and rounds < max_rounds
            and sweeps < max_sweeps
        ):
            rounds += 1
            if pd is None:
                pd = _PrimalDual(pk, S, u)
            pd.run(200)
            lower = max(lower, pd.lower)
            cand = [Point2(float(x), float(y)) for x, y in pd.S]
            cl, cs, cr, cc = _sweeps(regions, cand, path_length(cand), rel_tol, max_sweeps - sweeps, None, near)
            sweeps += cs
            if cl < length:
                pts, length, residual, converged = cand, cl, cr, cc
                if history is not None:
                    history.append(length)
                S = np.array(pts, dtype=float)
                lower = max(lower, pk.dual_bound(_leg_directions(S, 1e-12 * pk.scale)))
        if length - lower <= gap_tol * max(length, pk.scale):
            converged = True
    if not converged:
        warnings.warn(f"via-point optimisation stopped after {sweeps} sweeps (residual {residual:.3g})", RuntimeWarning)
    out.positions = pts
    out.length = path_length(pts)
    out.iterations = sweeps
    out.residual = residual
    out.converged = converged
    out.lower_bound = min(lower, out.length)
    return out
