"""Exact solvers for the NP-hard invariants.

Branch-and-bound everywhere: max clique with a greedy coloring bound,
domination by branching on a least-covered vertex, chromatic number by
saturation-ordered k-coloring attempts, chromatic index by deciding the
class I / class II dichotomy with an exact edge-coloring search.
"""

from __future__ import annotations

from ..budget import Budget
from ..core import Graph, complement


def clique_number(g: Graph, budget: Budget) -> int:
    n = g.n
    bits = g.bits
    best = 1  # n >= 1

    def expand(cand: int, size: int) -> None:
        nonlocal best
        budget.check()
        if not cand:
            if size > best:
                best = size
            return
        # greedy coloring of the candidates: color class index bounds the
        # clique size reachable from each vertex
        order: list[int] = []
        color_of: list[int] = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                color_of.append(color)
                avail &= ~bits[v]
                avail ^= low
                rest ^= low
        live = cand
        for i in range(len(order) - 1, -1, -1):
            if size + color_of[i] <= best:
                return
            v = order[i]
            expand(live & bits[v], size + 1)
            live &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def independence_number(g: Graph, budget: Budget) -> int:
    return clique_number(complement(g), budget)


def domination_number(g: Graph, budget: Budget) -> int:
    n = g.n
    closed = [g.bits[v] | 1 << v for v in range(n)]
    full = (1 << n) - 1
    # greedy cover for an initial upper bound
    dominated = 0
    greedy = 0
    while dominated != full:
        v = max(range(n), key=lambda u: (closed[u] & ~dominated).bit_count())
        dominated |= closed[v]
        greedy += 1
    best = greedy

    def search(dominated: int, count: int) -> None:
        nonlocal best
        budget.check()
        if dominated == full:
            if count < best:
                best = count
            return
        undominated = full & ~dominated
        max_cover = max((closed[v] & undominated).bit_count() for v in range(n))
        need = -(-undominated.bit_count() // max_cover)  # ceil division
        if count + need >= best:
            return
        # some chosen vertex must dominate the least-dominatable vertex
        target = min((x for x in _bit_list(undominated)),
                     key=lambda x: closed[x].bit_count())
        choices = sorted(_bit_list(closed[target]),
                         key=lambda u: -(closed[u] & undominated).bit_count())
        for u in choices:
            search(dominated | closed[u], count + 1)

    search(0, 0)
    return best


def _bit_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def chromatic_number(g: Graph, budget: Budget) -> int:
    n = g.n
    if g.m == 0:
        return 1
    lower = clique_number(g, budget)
    for k in range(lower, n + 1):
        if _colorable(g, k, budget):
            return k
    return n


def _colorable(g: Graph, k: int, budget: Budget) -> bool:
    """Backtracking proper k-coloring with saturation-first vertex choice and
    new colors introduced in canonical order."""
    n = g.n
    adj = g.adj
    colors = [-1] * n

    def rec(done: int, max_used: int) -> bool:
        budget.check()
        if done == n:
            return True
        pick = -1
        pick_key = (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[w] for w in adj[v] if colors[w] >= 0})
            key = (sat, len(adj[v]))
            if key > pick_key:
                pick_key = key
                pick = v
        limit = min(k - 1, max_used + 1)
        for c in range(limit + 1):
            if all(colors[w] != c for w in adj[pick]):
                colors[pick] = c
                if rec(done + 1, max(max_used, c)):
                    return True
                colors[pick] = -1
        return False

    return rec(0, -1)


def chromatic_index(g: Graph, budget: Budget) -> int:
    """Delta or Delta+1 on simple graphs; decided by exact search for a
    Delta-edge-coloring. Edgeless graphs need 0 colors."""
    if g.m == 0:
        return 0
    delta = max(len(a) for a in g.adj)
    edges = sorted(g.edges, key=lambda e: -(len(g.adj[e[0]]) + len(g.adj[e[1]])))
    used = [0] * g.n  # bitmask of colors present at each vertex
    m = len(edges)

    def rec(i: int, max_used: int) -> bool:
        budget.check()
        if i == m:
            return True
        u, v = edges[i]
        avail = ~(used[u] | used[v]) & ((1 << delta) - 1)
        limit = min(delta - 1, max_used + 1)
        while avail:
            low = avail & -avail
            avail ^= low
            c = low.bit_length() - 1
            if c > limit:
                break
            used[u] |= low
            used[v] |= low
            if rec(i + 1, max(max_used, c)):
                return True
            used[u] &= ~low
            used[v] &= ~low
        return False

    return delta if rec(0, -1) else delta + 1
