"""5/3-approximate shortest Hamiltonian path with fixed endpoints."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .graph_core import (
    Metric,
    as_weight_matrix,
    euclidean_matrix,
    eulerian_path,
    min_perfect_matching,
    prim_mst,
    shortcut_walk,
    walk_length,
    wrong_degree_nodes,
)


@dataclass(frozen=True)
class VisitationOrder:
    order: tuple[int, ...]
    length: float


def hoogeveen_order(metric: Metric, s: int, t: int, *, positions: bool = False) -> VisitationOrder:
    """MST + parity matching + Eulerian path + shortcut.

    metric is a weight matrix (or callable); with positions=True it is an (n, 2)
    array of points and Euclidean distances are used.
    """
    if positions:
        w = euclidean_matrix(metric)
    else:
        w = as_weight_matrix(metric, None if not callable(metric) else _infer_n(metric))
    n = w.shape[0]
    s, t = int(s), int(t)
    if n < 2:
        raise InvalidInputError("need at least two nodes")
    if not (0 <= s < n and 0 <= t < n) or s == t:
        raise InvalidInputError("s and t must be distinct valid indices")
    if n == 2:
        return VisitationOrder((s, t), float(w[s, t]))
    tree = prim_mst(w)
    join = wrong_degree_nodes(tree, s, t, n)
    matching = min_perfect_matching(join, w)
    walk = eulerian_path(sorted(tree + matching), s, t)
    order = shortcut_walk(walk, end=t)
    return VisitationOrder(tuple(int(v) for v in order), walk_length(order, w))


def _infer_n(metric) -> int:
    n = getattr(metric, "n", None)
    if n is None:
        raise InvalidInputError("callable metric must expose its node count as attribute n")
    return int(n)
