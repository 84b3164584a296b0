"""Immutable simple undirected graphs and elementary accessors.

Vertices are dense integers 0..n-1. Every other module passes these values
around; they are safe to share across threads because nothing mutates them
after construction.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    GraphError,
    NotAPermutationError,
    OrderTooLargeError,
    PermutationLengthError,
    SelfLoopError,
    VertexOutOfRangeError,
)

# Two-byte graph6 boundary; uploads past this need a config override.
MAX_ORDER_DEFAULT = 1023


class Graph:
    """Simple undirected graph: order `n`, sorted edge tuple, adjacency views.

    `edges` holds each edge once as (u, v) with u < v, sorted. `adj[v]` is the
    ascending neighbor tuple of v. `bits[v]` is the neighborhood of v as an
    int bitmask (bit u set iff u ~ v), which the invariant computers lean on.
    """

    __slots__ = ("n", "edges", "adj", "bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 max_order: int = MAX_ORDER_DEFAULT):
        if n < 1:
            raise GraphError(f"graph order must be at least 1, got {n}")
        if n > max_order:
            raise OrderTooLargeError(n, max_order)
        seen = set()
        for u, v in edges:
            if u == v:
                raise SelfLoopError(u)
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRangeError(w, n)
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(seen))
        bits = [0] * n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.bits = tuple(bits)
        self.adj = tuple(_bit_indices(b) for b in self.bits)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bit_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def build_graph(n: int, edges: Iterable[tuple[int, int]] = (),
                max_order: int = MAX_ORDER_DEFAULT) -> Graph:
    """Validate and construct a Graph; duplicate edge pairs collapse."""
    return Graph(n, edges, max_order)


def check_permutation(p: Sequence[int], n: int) -> None:
    """Raise unless p is a bijection on 0..n-1."""
    if len(p) != n:
        raise PermutationLengthError(len(p), n)
    if sorted(p) != list(range(n)):
        raise NotAPermutationError(f"{list(p)!r} is not a permutation of 0..{n - 1}")


def relabel(g: Graph, p: Sequence[int]) -> Graph:
    """Apply vertex permutation p: edge (u,v) becomes (p[u],p[v])."""
    check_permutation(p, g.n)
    return Graph(g.n, [(p[u], p[v]) for u, v in g.edges], max_order=max(g.n, MAX_ORDER_DEFAULT))


def inverse_permutation(p: Sequence[int]) -> list[int]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return inv


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    return Graph(g.n, edges, max_order=max(g.n, MAX_ORDER_DEFAULT))


def subgraph_induced(g: Graph, vs: Iterable[int]) -> Graph:
    """Induced subgraph on vs, relabeled to 0..|vs|-1 in ascending vs order."""
    kept = sorted(set(vs))
    for v in kept:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(v, g.n)
    index = {v: i for i, v in enumerate(kept)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(max(len(kept), 1), edges) if kept else Graph(1)


def delete_vertex(g: Graph, v: int) -> Graph:
    return subgraph_induced(g, [u for u in range(g.n) if u != v])


def degree_sequence(g: Graph) -> list[int]:
    return sorted(len(a) for a in g.adj)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def edges_of(g: Graph) -> list[tuple[int, int]]:
    return list(g.edges)
