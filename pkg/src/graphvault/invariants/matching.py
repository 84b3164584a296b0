"""Maximum matching via the blossom algorithm (cubic time).

Alternating BFS trees with odd-cycle contraction tracked through `base`
pointers; no weights, cardinality only.
"""

from __future__ import annotations

from collections import deque

from ..budget import Budget
from ..core import Graph


def matching_number(g: Graph, budget: Budget) -> int:
    n = g.n
    match = [-1] * n
    for u, v in g.edges:
        if match[u] < 0 and match[v] < 0:
            match[u] = v
            match[v] = u
    for v in range(n):
        if match[v] < 0:
            _augment(g, match, v, budget)
    return sum(1 for x in match if x >= 0) // 2


def _augment(g: Graph, match: list[int], root: int, budget: Budget) -> bool:
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        x = a
        while True:
            x = base[x]
            on_path[x] = True
            if match[x] < 0:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if on_path[y]:
                return y
            y = parent[match[y]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        budget.check()
        v = queue.popleft()
        for to in g.adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                cur_base = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur_base, to, in_blossom)
                mark_path(to, cur_base, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if match[to] < 0:
                    # augment along the found path
                    u = to
                    while u >= 0:
                        pv = parent[u]
                        nxt = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = nxt
                    return True
                in_tree[match[to]] = True
                queue.append(match[to])
    return False
