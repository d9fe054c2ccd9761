"""Along-path sensing node reduction by reverse greedy interval stabbing."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalInvariantError, InvalidInputError
from .geometry import Point2, SensingCircle, ViewingRegion, as_point, dist, lerp, segment_region_intervals

JOIN_TOL = 1e-12


@dataclass(frozen=True)
class OverlapInterval:
    region: int
    a: float
    b: float
    candidates: tuple = ()  # later entries of the same region, as (a, b) pairs

    def __post_init__(self) -> None:
        if self.a > self.b:
            raise InvalidInputError(f"interval start {self.a} exceeds end {self.b}")

    def contains(self, s: float, tol: float = JOIN_TOL) -> bool:
        return self.a - tol <= s <= self.b + tol


@dataclass
class Reduction:
    arclengths: list
    points: list
    assignment: dict = field(default_factory=dict)  # region id -> index into points


def cumulative_lengths(path: Sequence) -> list[float]:
    out = [0.0]
    for k in range(len(path) - 1):
        out.append(out[-1] + dist(path[k], path[k + 1]))
    return out


def point_at(path: Sequence, s: float, cum: Sequence[float] = None) -> Point2:
    """Path point at arclength s (clamped to the path)."""
    cum = cumulative_lengths(path) if cum is None else cum
    if s <= 0.0 or len(path) == 1:
        return as_point(path[0])
    if s >= cum[-1]:
        return as_point(path[-1])
    for k in range(len(path) - 1):
        if cum[k + 1] >= s:
            seg = cum[k + 1] - cum[k]
            return lerp(path[k], path[k + 1], 0.0 if seg == 0.0 else (s - cum[k]) / seg)
    return as_point(path[-1])


def _region_contains(region, p) -> bool:
    return region.contains(p)


def _pieces(path: Sequence, region, cum: Sequence[float]) -> list[list[float]]:
    pieces: list[list[float]] = []
    for k in range(len(path) - 1):
        a, b = as_point(path[k]), as_point(path[k + 1])
        seg = cum[k + 1] - cum[k]
        if seg == 0.0:
            ivs = [(0.0, 0.0)] if _region_contains(region, a) else []
        else:
            ivs = segment_region_intervals(a, b, region)
        for t0, t1 in ivs:
            s0, s1 = cum[k] + t0 * seg, cum[k] + t1 * seg
            if pieces and s0 - pieces[-1][1] <= JOIN_TOL * max(1.0, cum[-1]):
                pieces[-1][1] = max(pieces[-1][1], s1)
            else:
                pieces.append([s0, s1])
    if len(path) == 1 and _region_contains(region, path[0]):
        pieces.append([0.0, 0.0])
    return pieces


def overlap_intervals(path: Sequence, regions: Sequence) -> list[OverlapInterval]:
    """First maximal arclength interval of the path inside each region."""
    if not path:
        raise InvalidInputError("empty path")
    cum = cumulative_lengths(path)
    out = []
    for idx, region in enumerate(regions):
        pieces = _pieces(path, region, cum)
        if not pieces:
            raise InternalInvariantError(f"region {idx} is never visited by the path")
        a, b = pieces[0]
        out.append(OverlapInterval(idx, a, b, tuple((p, q) for p, q in pieces[1:])))
    return out


def reduce_nodes(intervals: Sequence[OverlapInterval], path: Sequence) -> Reduction:
    """Walk back from the path end: stab at the latest remaining start, drop what it covers, repeat."""
    if not intervals:
        raise InvalidInputError("no intervals to reduce")
    remaining = sorted(intervals, key=lambda iv: (iv.a, iv.b, iv.region))
    chosen: list[float] = []
    while remaining:
        s_new = remaining[-1].a
        chosen.append(s_new)
        remaining = [iv for iv in remaining if not iv.contains(s_new)]
    chosen.sort()
    cum = cumulative_lengths(path)
    red = Reduction(chosen, [point_at(path, s, cum) for s in chosen])
    for iv in intervals:
        hits = [k for k, s in enumerate(chosen) if iv.contains(s)]
        if not hits:
            raise InternalInvariantError(f"interval of region {iv.region} left unstabbed")
        red.assignment[iv.region] = hits[0]
    return red
