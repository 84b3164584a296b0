"""Cycle-structure invariants.

Girth comes from per-edge shortest alternative paths, triangles from
neighborhood intersections, and the three longest-subgraph invariants from
exhaustive backtracking over simple paths with bitmask state. All searches
honor the cooperative budget.
"""

from __future__ import annotations

from ..budget import Budget
from ..core import Graph, connected_components


def acyclic(g: Graph, budget: Budget) -> bool:
    return g.m == g.n - len(connected_components(g))


def girth(g: Graph, budget: Budget) -> int:
    """Shortest cycle length, 0 when acyclic.

    For each edge (u,v): the shortest cycle through that edge is 1 plus the
    u-v distance avoiding the edge itself.
    """
    best = 0
    for u, v in g.edges:
        budget.check()
        if best == 3:
            break
        dist = [-1] * g.n
        dist[u] = 0
        frontier = [u]
        while frontier and dist[v] < 0:
            nxt = []
            for x in frontier:
                for w in g.adj[x]:
                    if dist[w] < 0 and not (x == u and w == v):
                        dist[w] = dist[x] + 1
                        nxt.append(w)
            frontier = nxt
        if dist[v] >= 0 and (best == 0 or dist[v] + 1 < best):
            best = dist[v] + 1
    return best


def number_of_triangles(g: Graph, budget: Budget) -> int:
    total = 0
    for u, v in g.edges:
        total += (g.bits[u] & g.bits[v]).bit_count()
    return total // 3


def circumference(g: Graph, budget: Budget) -> int:
    """Longest cycle length (vertices), 0 when acyclic.

    Enumerates simple paths whose minimum vertex is the start, closing back
    to the start; pruned by the count of vertices still available.
    """
    n = g.n
    bits = g.bits
    best = 0

    def extend(start: int, v: int, visited: int, length: int, allowed: int) -> None:
        nonlocal best
        budget.check()
        if length > best and bits[v] >> start & 1 and length >= 3:
            best = length
        avail = allowed & ~visited
        if length + avail.bit_count() <= best:
            return
        cand = bits[v] & avail
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            extend(start, w, visited | low, length + 1, allowed)

    for s in range(n):
        if len(g.adj[s]) < 2:
            continue
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)  # vertices > s
        extend(s, s, 1 << s, 1, allowed)
    return best


def longest_induced_cycle(g: Graph, budget: Budget) -> int:
    """Vertex count of a largest chordless cycle, 0 when there is none."""
    n = g.n
    bits = g.bits
    best = 0

    def extend(start: int, v: int, visited: int, length: int, allowed: int) -> None:
        nonlocal best
        budget.check()
        start_bit = 1 << start
        v_bit = 1 << v
        cand = bits[v] & allowed & ~visited
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            inside = bits[w] & visited
            if inside == v_bit:
                extend(start, w, visited | low, length + 1, allowed)
            elif inside == v_bit | start_bit and length >= 2:
                if length + 1 > best:
                    best = length + 1

    for s in range(n):
        if len(g.adj[s]) < 2:
            continue
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        extend(s, s, 1 << s, 1, allowed)
    return best


def longest_induced_path(g: Graph, budget: Budget) -> int:
    """Vertex count of a longest induced path (1 for edgeless graphs).

    A path here always grows from one end, so starting the search at every
    vertex covers every induced path.
    """
    n = g.n
    bits = g.bits
    best = 1

    def extend(v: int, visited: int, length: int) -> None:
        nonlocal best
        budget.check()
        if length > best:
            best = length
        v_bit = 1 << v
        cand = bits[v] & ~visited
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if bits[w] & visited == v_bit:
                extend(w, visited | low, length + 1)

    for s in range(n):
        extend(s, 1 << s, 1)
    return best
