"""Eulerian and hamiltonian-family invariants.

Cycle and path existence run backtracking over bitmask states with a
stranded-vertex prune. The hypo variants test every vertex-deleted subgraph,
mirroring their definitions directly.
"""

from __future__ import annotations

from ..budget import Budget
from ..core import Graph, connected_components, delete_vertex, is_connected


def eulerian(g: Graph, budget: Budget) -> bool:
    """Closed walk through every edge: even degrees and all edges in one
    component. Edgeless graphs qualify (the empty walk)."""
    if any(len(a) % 2 for a in g.adj):
        return False
    carrying = [c for c in connected_components(g) if len(c) > 1]
    return len(carrying) <= 1


def hamiltonian(g: Graph, budget: Budget) -> bool:
    n = g.n
    if n < 3:
        return False
    if any(len(a) < 2 for a in g.adj) or not is_connected(g):
        return False
    bits = g.bits
    full = (1 << n) - 1

    def rec(v: int, visited: int) -> bool:
        budget.check()
        if visited == full:
            return bool(bits[v] & 1)  # close back to vertex 0
        cand = bits[v] & ~visited
        # a vertex with no way in is a dead end
        rest = ~visited & full & ~cand
        check = rest
        while check:
            low = check & -check
            check ^= low
            w = low.bit_length() - 1
            if not bits[w] & ~visited:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            if rec(low.bit_length() - 1, visited | low):
                return True
        return False

    return rec(0, 1)


def traceable(g: Graph, budget: Budget) -> bool:
    """Spanning path; the one-vertex graph counts as the trivial path."""
    n = g.n
    if n == 1:
        return True
    if not is_connected(g):
        return False
    bits = g.bits
    full = (1 << n) - 1

    def rec(v: int, visited: int) -> bool:
        budget.check()
        if visited == full:
            return True
        cand = bits[v] & ~visited
        stranded = 0
        rest = ~visited & full & ~cand
        check = rest
        while check:
            low = check & -check
            check ^= low
            w = low.bit_length() - 1
            free = bits[w] & ~visited
            if not free:
                return False
            if free & (free - 1) == 0:
                stranded += 1  # degree-1 leftovers can only end the path
                if stranded > 1:
                    return False
        while cand:
            low = cand & -cand
            cand ^= low
            if rec(low.bit_length() - 1, visited | low):
                return True
        return False

    degree_one = [v for v in range(n) if len(g.adj[v]) == 1]
    if len(degree_one) > 2:
        return False
    starts = [degree_one[0]] if degree_one else range(n)
    return any(rec(s, 1 << s) for s in starts)


def hypohamiltonian(g: Graph, budget: Budget) -> bool:
    if g.n == 1:
        return False
    if hamiltonian(g, budget):
        return False
    return all(hamiltonian(delete_vertex(g, v), budget) for v in range(g.n))


def hypotraceable(g: Graph, budget: Budget) -> bool:
    if g.n == 1:
        return False
    if traceable(g, budget):
        return False
    return all(traceable(delete_vertex(g, v), budget) for v in range(g.n))
