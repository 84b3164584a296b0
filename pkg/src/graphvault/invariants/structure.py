"""Bipartiteness, claw-freeness, planarity, genus, treewidth.

Planarity and orientable genus are both additive over biconnected blocks, so
each block is handled alone. Blocks are tested planar by face insertion: grow
an embedded subgraph from a cycle, and at each step place a fragment with the
fewest admissible faces. Nonplanar blocks get an exact genus search over
rotation systems, built one edge at a time through every insertion gap: an
edge whose two corners lie on the same face splits that face (genus
unchanged), otherwise two faces merge (genus + 1).

Treewidth is the exact subset dynamic program over elimination orderings,
entered only when the degeneracy lower bound and greedy upper bound differ.
"""

from __future__ import annotations

from array import array
from itertools import combinations

from ..budget import Budget
from ..core import Graph, subgraph_induced
from ..errors import ComputationInterrupted


def bipartite(g: Graph, budget: Budget) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        nxt.append(w)
                    elif color[w] == color[u]:
                        return False
            frontier = nxt
    return True


def claw_free(g: Graph, budget: Budget) -> bool:
    """No induced K1,3: no vertex has three pairwise non-adjacent neighbors."""
    for v in range(g.n):
        budget.check()
        nbrs = g.adj[v]
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


# ------------------------------------------------------------- planarity


def _blocks(g: Graph) -> list[list[int]]:
    """Vertex lists of the biconnected blocks, via an iterative lowpoint
    walk with an edge stack. Isolated vertices yield no block."""
    disc = [0] * g.n
    low = [0] * g.n
    timer = 1
    estack: list[tuple[int, int]] = []
    out: list[list[int]] = []
    for root in range(g.n):
        if disc[root]:
            continue
        stack = [(root, -1, 0)]
        while stack:
            v, parent, idx = stack.pop()
            if idx == 0:
                disc[v] = low[v] = timer
                timer += 1
            advanced = False
            while idx < len(g.adj[v]):
                w = g.adj[v][idx]
                idx += 1
                if not disc[w]:
                    estack.append((v, w))
                    stack.append((v, parent, idx))
                    stack.append((w, v, 0))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    verts = set()
                    while True:
                        a, b = estack.pop()
                        verts.add(a)
                        verts.add(b)
                        if (a, b) == (parent, v):
                            break
                    out.append(sorted(verts))
    return out


def _find_cycle(g: Graph) -> list[int] | None:
    """Some cycle as a vertex list: grow a forest edge by edge, and the
    first edge closing within one tree yields the cycle through it."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        if find(u) == find(v):
            prev = {u: -1}
            queue = [u]
            for x in queue:
                if x == v:
                    break
                for w in forest[x]:
                    if w not in prev:
                        prev[w] = x
                        queue.append(w)
            path = [v]
            while path[-1] != u:
                path.append(prev[path[-1]])
            return path
        parent[find(u)] = find(v)
        forest[u].add(v)
        forest[v].add(u)
    return None


def _fragments(g: Graph, placed: set[int], placed_edges: set[tuple[int, int]]):
    """Bridges of g relative to the embedded subgraph: chords plus the
    components of the unplaced vertices. Yields (attachments, inner_set)."""
    for u, v in g.edges:
        if u in placed and v in placed and (u, v) not in placed_edges:
            yield [u, v], set()
    seen: set[int] = set()
    for s in range(g.n):
        if s in placed or s in seen:
            continue
        comp = {s}
        queue = [s]
        attach = set()
        while queue:
            x = queue.pop()
            for w in g.adj[x]:
                if w in placed:
                    attach.add(w)
                elif w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        yield sorted(attach), comp


def _fragment_path(g: Graph, attach: list[int], inner: set[int]) -> list[int]:
    """A path between two attachments whose interior stays inside the
    fragment."""
    if not inner:
        return attach[:2]
    a = attach[0]
    prev = {x: a for x in inner if g.has_edge(a, x)}
    queue = list(prev)
    goal = set(attach[1:])
    for x in queue:
        for w in g.adj[x]:
            if w in goal:
                path = [w, x]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            if w in inner and w not in prev:
                prev[w] = x
                queue.append(w)
    raise AssertionError("fragment path must exist in a block")


def _block_planar(g: Graph, budget: Budget) -> bool:
    """Face insertion on a biconnected graph: place a fragment with the
    fewest admissible faces each round; zero admissible means nonplanar."""
    if g.m > 3 * g.n - 6 and g.n >= 3:
        return False
    cycle = _find_cycle(g)
    if cycle is None:
        return True
    faces = [list(cycle), list(cycle)]
    placed = set(cycle)
    placed_edges: set[tuple[int, int]] = set()
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        placed_edges.add((v, w) if v < w else (w, v))
    while len(placed_edges) < g.m:
        budget.check()
        best = None
        for attach, inner in _fragments(g, placed, placed_edges):
            need = set(attach)
            admissible = [i for i, f in enumerate(faces) if need <= set(f)]
            if not admissible:
                return False
            if best is None or len(admissible) < best[0]:
                best = (len(admissible), attach, inner, admissible[0])
                if best[0] == 1:
                    break
        _, attach, inner, face_idx = best
        path = _fragment_path(g, attach, inner)
        boundary = faces.pop(face_idx)
        i = boundary.index(path[0])
        j = boundary.index(path[-1])
        arc1 = (boundary[i:] + boundary[:i])[: (j - i) % len(boundary) + 1]
        arc2 = (boundary[j:] + boundary[:j])[: (i - j) % len(boundary) + 1]
        interior = path[1:-1]
        faces.append(arc1 + interior[::-1])
        faces.append(arc2 + interior)
        placed |= set(interior)
        for a, b in zip(path, path[1:]):
            placed_edges.add((a, b) if a < b else (b, a))
    return True


# -------------------------------------------------------------------- genus


def _trace_faces(rot: list[list[int]]) -> tuple[dict[tuple[int, int], int], int]:
    """Map each corner (v, gap index) to its face id in the embedding given
    by rotation system `rot`. The face after dart u->rot[u][i] turns at
    v = rot[u][i] into the gap following u's slot in rot[v]."""
    corner_face: dict[tuple[int, int], int] = {}
    seen: set[tuple[int, int]] = set()
    faces = 0
    for start_u in range(len(rot)):
        for start_i in range(len(rot[start_u])):
            if (start_u, start_i) in seen:
                continue
            u, i = start_u, start_i
            while (u, i) not in seen:
                seen.add((u, i))
                v = rot[u][i]
                j = rot[v].index(u)
                corner_face[(v, j)] = faces
                u, i = v, (j + 1) % len(rot[v])
            faces += 1
    return corner_face, faces


def _shortest_cycle_length(g: Graph) -> int:
    """Exact girth by BFS from every vertex; 0 when acyclic."""
    best = 0
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.adj[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif y != parent[x] and parent[y] != x and dist[y] >= dist[x]:
                        cand = dist[x] + dist[y] + 1
                        if best == 0 or cand < best:
                            best = cand
            frontier = nxt
    return best


def _genus_lower_bound(g: Graph) -> int:
    """Euler bound refined by girth: every face of an embedding is bounded
    by a closed walk no shorter than the shortest cycle."""
    if g.n < 3 or g.m < 3:
        return 0
    girth = _shortest_cycle_length(g)
    if girth == 0:
        return 0
    num = girth * (2 - g.n) + g.m * (girth - 2)
    return max(0, -(-num // (2 * girth)))


def _block_genus_at_most(g: Graph, target: int, budget: Budget) -> bool:
    """Whether connected g embeds with genus <= target. Edges arrive vertex
    by vertex and pass through every rotation gap, so the search covers all
    rotation systems up to mirror image."""
    n = g.n
    extra = g.m - (n - 1)
    if extra <= 3:
        return True  # cycle rank below 4 cannot host a K5 or K3,3 minor
    if target < _genus_lower_bound(g):
        return False
    if g.m > 500:
        raise ComputationInterrupted(f"genus search infeasible at m={g.m}")
    root = max(range(n), key=lambda v: len(g.adj[v]))
    pos = [-1] * n
    pos[root] = 0
    vertex_order = [root]
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if pos[w] < 0:
                    pos[w] = len(vertex_order)
                    vertex_order.append(w)
                    nxt.append(w)
        frontier = nxt
    # all of a vertex's edges to earlier vertices go in before the next
    # vertex, so an infeasible induced prefix dies at once
    order: list[tuple[int, int]] = []
    for v in vertex_order[1:]:
        order.extend((u, v) for u in sorted(g.adj[v], key=lambda u: pos[u])
                     if pos[u] < pos[v])
    rot: list[list[int]] = [[] for _ in range(n)]

    def gaps_at(u: int) -> range:
        # pinning the root's first triple to one chirality discards the
        # mirror image of every embedding, which has the same genus
        if u == root and len(rot[u]) == 2:
            return range(1)
        return range(max(1, len(rot[u])))

    def insert(i: int, genus: int) -> bool:
        budget.check()
        if i == len(order):
            return True
        u, v = order[i]
        if not rot[v]:
            # first edge of a fresh vertex: free, any gap at u works
            for gu in gaps_at(u):
                rot[u].insert(gu + 1, v)
                rot[v].append(u)
                if insert(i + 1, genus):
                    return True
                rot[u].remove(v)
                rot[v].clear()
            return False
        corner_face, _ = _trace_faces(rot)
        pairs = []
        for gu in gaps_at(u):
            fu = corner_face[(u, gu)]
            for gv in range(len(rot[v])):
                same = fu == corner_face[(v, gv)]
                if genus + (0 if same else 1) <= target:
                    pairs.append((0 if same else 1, gu, gv))
        pairs.sort(key=lambda p: p[0])  # face-splitting insertions first
        for cost, gu, gv in pairs:
            rot[u].insert(gu + 1, v)
            rot[v].insert(gv + 1, u)
            if insert(i + 1, genus + cost):
                return True
            del rot[u][gu + 1]
            del rot[v][gv + 1]
        return False

    return insert(0, 0)


def genus(g: Graph, budget: Budget) -> int:
    """Minimum orientable genus, additive over blocks."""
    total = 0
    for block in _blocks(g):
        sub = subgraph_induced(g, block)
        if _block_planar(sub, budget):
            continue
        t = max(1, _genus_lower_bound(sub))
        while not _block_genus_at_most(sub, t, budget):
            t += 1
        total += t
    return total


def planar(g: Graph, budget: Budget) -> bool:
    for block in _blocks(g):
        sub = subgraph_induced(g, block)
        if not _block_planar(sub, budget):
            return False
    return True


# ---------------------------------------------------------------- treewidth


def _degeneracy(g: Graph) -> int:
    alive = list(range(g.n))
    bits = list(g.bits)
    mask = (1 << g.n) - 1
    best = 0
    for _ in range(g.n):
        v = min(alive, key=lambda u: (bits[u] & mask).bit_count())
        best = max(best, (bits[v] & mask).bit_count())
        alive.remove(v)
        mask &= ~(1 << v)
    return best


def _greedy_width(g: Graph) -> int:
    """Width of the min-fill-degree greedy elimination order."""
    n = g.n
    nb = [g.bits[v] for v in range(n)]
    alive = (1 << n) - 1
    width = 0
    for _ in range(n):
        v = min((u for u in range(n) if alive >> u & 1),
                key=lambda u: (nb[u] & alive).bit_count())
        clique = nb[v] & alive & ~(1 << v)
        width = max(width, clique.bit_count())
        alive &= ~(1 << v)
        rest = clique
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            nb[w] |= clique & ~(1 << w)
    return width


def _q_size(bits: tuple[int, ...], w_mask: int, v: int) -> int:
    """Count vertices outside w_mask (v excluded) reachable from v through
    w_mask."""
    seen = 1 << v
    stack = [v]
    out = 0
    while stack:
        u = stack.pop()
        nb = bits[u]
        out |= nb & ~w_mask
        inside = nb & w_mask & ~seen
        seen |= inside
        while inside:
            low = inside & -inside
            inside ^= low
            stack.append(low.bit_length() - 1)
    return (out & ~(1 << v)).bit_count()


def treewidth(g: Graph, budget: Budget) -> int:
    n = g.n
    if n == 1:
        return 0
    lower = _degeneracy(g)
    upper = _greedy_width(g)
    if lower == upper:
        return lower
    if n > 24:
        # the 2^n table would exhaust memory before any budget fires
        raise ComputationInterrupted(f"treewidth subset table infeasible at n={n}")
    bits = g.bits
    full = (1 << n) - 1
    dp = array("b", [0]) * (full + 1)
    for s in range(1, full + 1):
        budget.check()
        best = n
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            w_mask = s ^ low
            cand = dp[w_mask]
            q = _q_size(bits, w_mask, v)
            if q > cand:
                cand = q
            if cand < best:
                best = cand
        dp[s] = best
    return dp[full]
