"""Connectivity invariants: components, eccentricities, vertex/edge cuts.

Vertex and edge connectivity run unit-capacity maximum flows; vertex
connectivity splits every vertex into an in/out pair so internal vertices
carry capacity one.
"""

from __future__ import annotations

from ..budget import Budget
from ..core import Graph, bfs_distances, connected_components, is_connected

_BIG = 1 << 30


def connected(g: Graph, budget: Budget) -> bool:
    return is_connected(g)


def number_of_components(g: Graph, budget: Budget) -> int:
    return len(connected_components(g))


def _eccentricities(g: Graph, budget: Budget) -> list[int] | None:
    """Per-vertex eccentricity, or None when disconnected."""
    ecc = []
    for v in range(g.n):
        budget.check()
        dist = bfs_distances(g, v)
        if min(dist) < 0:
            return None
        ecc.append(max(dist))
    return ecc


def diameter(g: Graph, budget: Budget) -> int:
    ecc = _eccentricities(g, budget)
    return -1 if ecc is None else max(ecc)


def radius(g: Graph, budget: Budget) -> int:
    ecc = _eccentricities(g, budget)
    return -1 if ecc is None else min(ecc)


def _max_flow(cap: list[dict[int, int]], s: int, t: int, budget: Budget) -> int:
    """Edmonds-Karp on an adjacency-dict residual network."""
    flow = 0
    while True:
        budget.check()
        parent: dict[int, int] = {s: s}
        frontier = [s]
        while frontier and t not in parent:
            nxt = []
            for u in frontier:
                for w, c in cap[u].items():
                    if c > 0 and w not in parent:
                        parent[w] = u
                        nxt.append(w)
            frontier = nxt
        if t not in parent:
            return flow
        path = [t]
        while path[-1] != s:
            path.append(parent[path[-1]])
        path.reverse()
        bottleneck = min(cap[path[i]][path[i + 1]] for i in range(len(path) - 1))
        for i in range(len(path) - 1):
            u, w = path[i], path[i + 1]
            cap[u][w] -= bottleneck
            cap[w][u] = cap[w].get(u, 0) + bottleneck
        flow += bottleneck


def vertex_connectivity(g: Graph, budget: Budget) -> int:
    """Minimum vertex cut; n-1 for complete graphs, 0 when disconnected."""
    n = g.n
    if n == 1 or not is_connected(g):
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = n - 1
    # split vertices: v_in = 2v, v_out = 2v + 1
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
            for v in range(n):
                cap[2 * v][2 * v + 1] = _BIG if v in (s, t) else 1
            for u, v in g.edges:
                cap[2 * u + 1][2 * v] = _BIG
                cap[2 * v + 1][2 * u] = _BIG
            best = min(best, _max_flow(cap, 2 * s + 1, 2 * t, budget))
    return best


def edge_connectivity(g: Graph, budget: Budget) -> int:
    """Minimum edge cut; 0 when disconnected or n = 1."""
    n = g.n
    if n == 1 or not is_connected(g):
        return 0
    best = g.m
    for t in range(1, n):
        cap: list[dict[int, int]] = [dict() for _ in range(n)]
        for u, v in g.edges:
            cap[u][v] = 1
            cap[v][u] = 1
        best = min(best, _max_flow(cap, 0, t, budget))
    return best
