"""Seeded random instance generators shared by the benchmark, scripts and tests."""

from __future__ import annotations

import math

import numpy as np

from .geometry import Polygon
from .scenario import Scenario


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(trial)])


def random_disjoint(n: int, rng: np.random.Generator, r: float = 1.0, spread: float = 3.0) -> Scenario:
    """n sensing circles with disjoint interiors, rejection-sampled in a square of side spread * r * sqrt(n)."""
    side = spread * r * math.sqrt(n) * 2.0
    pts: list[tuple[float, float]] = []
    while len(pts) < n:
        p = tuple(float(v) for v in rng.uniform(0.0, side, 2))
        if all(math.dist(p, q) >= 2.0 * r * (1.0 + 1e-6) for q in pts):
            pts.append(p)
    return Scenario(tuple(pts), r)


def random_overlapping(n: int, rng: np.random.Generator, r: float = 1.0, side: float = 5.0) -> Scenario:
    """n distinct targets in a side x side square; circles typically overlap."""
    pts: list[tuple[float, float]] = []
    while len(pts) < n:
        p = tuple(float(v) for v in rng.uniform(0.0, side, 2))
        if all(math.dist(p, q) > 1e-3 for q in pts):
            pts.append(p)
    return Scenario(tuple(pts), r)


def random_obstacle_scene(n: int, rng: np.random.Generator, r: float = 1.5, side: float = 10.0, max_boxes: int = 3) -> Scenario:
    """Axis-aligned box obstacles (at most 4 * max_boxes vertices) and n targets in free space."""
    boxes = []
    for _ in range(int(rng.integers(1, max_boxes + 1))):
        x, y = rng.uniform(0.5, side - 2.5, 2)
        w, h = rng.uniform(0.4, 2.0, 2)
        boxes.append(Polygon.from_points([(x, y), (x + w, y), (x + w, y + h), (x, y + h)]))
    pts: list[tuple[float, float]] = []
    while len(pts) < n:
        p = tuple(float(v) for v in rng.uniform(0.0, side, 2))
        if all(math.dist(p, q) > 1e-3 for q in pts) and not any(b.contains_strict(p) or b.on_boundary(p) for b in boxes):
            pts.append(p)
    return Scenario(tuple(pts), r, obstacles=tuple(boxes))
