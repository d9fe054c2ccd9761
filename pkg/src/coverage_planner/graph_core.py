"""MST, exact small matchings, Eulerian S-to-T walks and shortcutting."""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import CapacityError, InternalInvariantError, InvalidInputError

Edge = tuple[int, int]
MATCHING_CAP = 20

Metric = Union[np.ndarray, Sequence[Sequence[float]], Callable[[int, int], float]]


def as_weight_matrix(w: Metric, n: Optional[int] = None) -> np.ndarray:
    if callable(w):
        if n is None:
            raise InvalidInputError("callable metric needs an explicit node count")
        m = np.array([[0.0 if i == j else float(w(i, j)) for j in range(n)] for i in range(n)])
    else:
        m = np.asarray(w, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidInputError("weight matrix must be square")
    if not np.all(np.isfinite(m)) or np.any(m < 0):
        raise InvalidInputError("weights must be finite and non-negative")
    if not np.allclose(m, m.T, rtol=1e-12, atol=1e-12):
        raise InvalidInputError("weight matrix must be symmetric")
    return m


def euclidean_matrix(points) -> np.ndarray:
    p = np.asarray(points, dtype=float)
    diff = p[:, None, :] - p[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1])


def prim_mst(w: Metric) -> list[Edge]:
    """Minimum spanning tree of the complete graph; ties go to the smallest (i, j)."""
    w = as_weight_matrix(w)
    n = w.shape[0]
    if n < 1:
        raise InvalidInputError("graph needs at least one node")
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = w[0].copy()
    parent = np.zeros(n, dtype=int)
    edges: list[Edge] = []
    for _ in range(n - 1):
        cand = [(best[v], min(parent[v], v), max(parent[v], v), v) for v in range(n) if not in_tree[v]]
        _, i, j, v = min(cand)
        edges.append((i, j))
        in_tree[v] = True
        for u in range(n):
            if not in_tree[u]:
                key_new = (w[v, u], min(v, u), max(v, u))
                key_old = (best[u], min(parent[u], u), max(parent[u], u))
                if key_new < key_old:
                    best[u] = w[v, u]
                    parent[u] = v
    return sorted(edges)


def degrees(edges: Sequence[Edge], n: int) -> list[int]:
    deg = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    return deg


def wrong_degree_nodes(tree: Sequence[Edge], s: int, t: int, n: Optional[int] = None) -> list[int]:
    """Nodes whose parity blocks an s-t Eulerian path: s, t when even; others when odd."""
    if n is None:
        n = 1 + max([s, t] + [max(e) for e in tree])
    deg = degrees(tree, n)
    out = []
    for v in range(n):
        want_odd = s != t and v in (s, t)
        if (deg[v] % 2 == 1) != want_odd:
            out.append(v)
    return out


def min_perfect_matching(nodes: Sequence[int], w: Metric) -> list[Edge]:
    """Exact minimum-weight perfect matching by subset DP."""
    nodes = list(nodes)
    k = len(nodes)
    if k % 2:
        raise InvalidInputError(f"perfect matching needs an even node count, got {k}")
    if k > MATCHING_CAP:
        raise CapacityError(f"matching over {k} nodes exceeds the exact-solver cap of {MATCHING_CAP}")
    if k == 0:
        return []
    if callable(w):
        sub = np.array([[0.0 if a == b else float(w(a, b)) for b in nodes] for a in nodes])
    else:
        wm = np.asarray(w, dtype=float)
        sub = wm[np.ix_(nodes, nodes)]
    full = (1 << k) - 1
    cost = np.full(1 << k, np.inf)
    choice = np.full(1 << k, -1, dtype=np.int64)
    cost[0] = 0.0
    # masks are processed in increasing order; the lowest unset bit is paired first
    for mask in range(1 << k):
        c = cost[mask]
        if c == np.inf:
            continue
        if mask == full:
            break
        i = 0
        while mask >> i & 1:
            i += 1
        for j in range(i + 1, k):
            if not mask >> j & 1:
                m2 = mask | (1 << i) | (1 << j)
                v = c + sub[i, j]
                if v < cost[m2]:
                    cost[m2] = v
                    choice[m2] = i * k + j
    out = []
    mask = full
    while mask:
        i, j = divmod(int(choice[mask]), k)
        out.append((min(nodes[i], nodes[j]), max(nodes[i], nodes[j])))
        mask &= ~((1 << i) | (1 << j))
    return sorted(out)


def eulerian_path(edges: Sequence[Edge], s: int, t: int) -> list[int]:
    """Walk from s to t using every edge once (Hierholzer splicing)."""
    if not edges:
        if s != t:
            raise InternalInvariantError("no edges but s != t")
        return [s]
    n = 1 + max(max(e) for e in edges)
    n = max(n, s + 1, t + 1)
    deg = degrees(edges, n)
    for v in range(n):
        odd = deg[v] % 2 == 1
        if (s != t and v in (s, t)) != odd:
            raise InternalInvariantError(f"degree parity violated at node {v}")
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for idx, (i, j) in enumerate(edges):
        adj[i].append((j, idx))
        adj[j].append((i, idx))
    for v in adj:
        adj[v].sort(reverse=True)  # pop() yields the smallest neighbour first
    used = [False] * len(edges)
    stack = [s]
    walk: list[int] = []
    while stack:
        v = stack[-1]
        nbrs = adj[v]
        while nbrs and used[nbrs[-1][1]]:
            nbrs.pop()
        if nbrs:
            u, idx = nbrs.pop()
            used[idx] = True
            stack.append(u)
        else:
            walk.append(stack.pop())
    walk.reverse()
    if not all(used) or walk[-1] != t:
        raise InternalInvariantError("edge multigraph is disconnected")
    return walk


def shortcut_walk(walk: Sequence[int], end: Optional[int] = None) -> list[int]:
    """First occurrence of each node in order.  With end given, that node is moved to the last slot."""
    seen = set()
    out = []
    for v in walk:
        if v in seen or v == end:
            continue
        seen.add(v)
        out.append(v)
    if end is not None:
        out.append(end)
    return out


def walk_length(walk: Sequence[int], w: np.ndarray) -> float:
    return float(sum(w[walk[k], walk[k + 1]] for k in range(len(walk) - 1)))
