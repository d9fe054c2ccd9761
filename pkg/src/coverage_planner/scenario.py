"""Problem instances and planner output."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from .errors import InvalidInputError
from .geometry import Point2, Polygon, SensingCircle, as_point, dist, polyline_length


@dataclass(frozen=True)
class Scenario:
    targets: tuple
    r: float
    start: int = 0
    end: Optional[int] = None
    obstacles: tuple = ()
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        targets = tuple(as_point(t) for t in self.targets)
        n = len(targets)
        if n < 2:
            raise InvalidInputError(f"at least 2 targets are required, got {n}")
        r = float(self.r)
        if not (math.isfinite(r) and r > 0.0):
            raise InvalidInputError(f"sensing radius must be positive, got {self.r!r}")
        end = n - 1 if self.end is None else int(self.end)
        start = int(self.start)
        if not (0 <= start < n and 0 <= end < n):
            raise InvalidInputError(f"start/end indices must lie in [0, {n - 1}]")
        if start == end:
            raise InvalidInputError("start and end indices must differ")
        seen = {}
        for k, t in enumerate(targets):
            if t in seen:
                raise InvalidInputError(f"duplicate target position {tuple(t)} (indices {seen[t]} and {k})")
            seen[t] = k
        obstacles = tuple(o if isinstance(o, Polygon) else Polygon.from_points(o) for o in self.obstacles)
        for k, t in enumerate(targets):
            for poly in obstacles:
                if poly.contains_strict(t):
                    raise InvalidInputError(f"target {k} at {tuple(t)} lies inside an obstacle")
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)
        object.__setattr__(self, "obstacles", obstacles)

    @property
    def n(self) -> int:
        return len(self.targets)

    def circles(self) -> list[SensingCircle]:
        return [SensingCircle(t, self.r) for t in self.targets]

    def without_obstacles(self) -> "Scenario":
        return Scenario(self.targets, self.r, self.start, self.end, (), self.seed)


@dataclass
class CoveragePlan:
    """Sensing nodes in visiting order plus the polyline that visits them.

    assignment maps each target index to the index (into nodes) of a node that
    observes it.  The path always starts at the start target.
    """

    nodes: list
    path: list
    length: float
    order: tuple
    assignment: dict
    info: dict = field(default_factory=dict)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def check_length(self, tol: float = 1e-9) -> bool:
        return abs(polyline_length(self.path) - self.length) <= tol * max(1.0, self.length)


def covers_all(plan: CoveragePlan, scn: Scenario, regions: Optional[Sequence] = None, tol: float = 1e-9) -> bool:
    """Every target has an assigned node within range (and inside its region when given)."""
    for i in range(scn.n):
        k = plan.assignment.get(i)
        if k is None:
            return False
        node = plan.nodes[k]
        if dist(node, scn.targets[i]) > scn.r + tol:
            return False
        if regions is not None and not regions[i].contains(node, tol):
            return False
    return True
