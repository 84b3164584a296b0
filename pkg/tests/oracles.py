"""Independent brute-force oracles for every invariant.

Each oracle reads only a graph's order and edge tuple and recomputes the
value by naive exhaustion (subset/permutation enumeration, exact rational
characteristic polynomials). None of them share algorithmic structure with
the package implementations; they exist so test expectations are derived,
never invented. Practical up to n around 8.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import networkx as nx
import numpy as np


def edge_set(g) -> frozenset:
    return frozenset(g.edges)


def adjacency(n: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def has_edge(edges, u: int, v: int) -> bool:
    return (min(u, v), max(u, v)) in edges


def components(n: int, edges) -> list[set[int]]:
    adj = adjacency(n, edges)
    seen = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(comp)
    return out


def o_number_of_vertices(g) -> int:
    return g.n


def o_number_of_edges(g) -> int:
    return len(g.edges)


def o_minimum_degree(g) -> int:
    adj = adjacency(g.n, edge_set(g))
    return min(len(a) for a in adj)


def o_maximum_degree(g) -> int:
    adj = adjacency(g.n, edge_set(g))
    return max(len(a) for a in adj)


def o_average_degree(g) -> float:
    return 2.0 * len(g.edges) / g.n


def o_density(g) -> float:
    if g.n < 2:
        return 0.0
    return len(g.edges) / (g.n * (g.n - 1) / 2)


def o_regular(g) -> bool:
    adj = adjacency(g.n, edge_set(g))
    return len({len(a) for a in adj}) <= 1


def o_connected(g) -> bool:
    return len(components(g.n, edge_set(g))) == 1


def o_number_of_components(g) -> int:
    return len(components(g.n, edge_set(g)))


def _distances(g):
    """All-pairs distances by Floyd-Warshall; None for unreachable."""
    n = g.n
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def o_diameter(g) -> int:
    d = _distances(g)
    worst = max(max(row) for row in d)
    return -1 if worst == float("inf") else int(worst)


def o_radius(g) -> int:
    d = _distances(g)
    if any(max(row) == float("inf") for row in d):
        return -1
    return int(min(max(row) for row in d))


def _all_cycles(g):
    """Lengths of every simple cycle, each found once (smallest vertex is
    the anchor, second vertex fixed below the last to kill reflections)."""
    edges = edge_set(g)
    adj = adjacency(g.n, edges)
    lengths = []

    def walk(anchor, path, used):
        v = path[-1]
        for w in sorted(adj[v]):
            if w == anchor and len(path) >= 3:
                if path[1] < path[-1]:
                    lengths.append(len(path))
            elif w > anchor and w not in used:
                path.append(w)
                used.add(w)
                walk(anchor, path, used)
                used.remove(w)
                path.pop()

    for a in range(g.n):
        walk(a, [a], {a})
    return lengths


def o_girth(g) -> int:
    lengths = _all_cycles(g)
    return min(lengths) if lengths else 0


def o_circumference(g) -> int:
    lengths = _all_cycles(g)
    return max(lengths) if lengths else 0


def o_acyclic(g) -> bool:
    return not _all_cycles(g)


def o_number_of_triangles(g) -> int:
    edges = edge_set(g)
    return sum(1 for a, b, c in itertools.combinations(range(g.n), 3)
               if has_edge(edges, a, b) and has_edge(edges, a, c)
               and has_edge(edges, b, c))


def _induced_degrees(edges, subset):
    deg = {v: 0 for v in subset}
    for u, v in itertools.combinations(sorted(subset), 2):
        if (u, v) in edges:
            deg[u] += 1
            deg[v] += 1
    return deg


def _induced_connected(edges, subset) -> bool:
    subset = set(subset)
    start = next(iter(subset))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in subset:
            if w not in seen and has_edge(edges, v, w):
                seen.add(w)
                stack.append(w)
    return seen == subset


def o_longest_induced_cycle(g) -> int:
    edges = edge_set(g)
    for k in range(g.n, 2, -1):
        for subset in itertools.combinations(range(g.n), k):
            deg = _induced_degrees(edges, subset)
            if all(d == 2 for d in deg.values()) and _induced_connected(edges, subset):
                return k
    return 0


def o_longest_induced_path(g) -> int:
    edges = edge_set(g)
    for k in range(g.n, 1, -1):
        for subset in itertools.combinations(range(g.n), k):
            deg = sorted(_induced_degrees(edges, subset).values())
            if deg == [1, 1] + [2] * (k - 2) and _induced_connected(edges, subset):
                return k
    return 1


def o_clique_number(g) -> int:
    edges = edge_set(g)
    for k in range(g.n, 1, -1):
        for subset in itertools.combinations(range(g.n), k):
            if all(has_edge(edges, u, v)
                   for u, v in itertools.combinations(subset, 2)):
                return k
    return 1


def o_independence_number(g) -> int:
    edges = edge_set(g)
    for k in range(g.n, 1, -1):
        for subset in itertools.combinations(range(g.n), k):
            if not any(has_edge(edges, u, v)
                       for u, v in itertools.combinations(subset, 2)):
                return k
    return 1


def o_domination_number(g) -> int:
    adj = adjacency(g.n, edge_set(g))
    closed = [a | {v} for v, a in enumerate(adj)]
    everyone = set(range(g.n))
    for k in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if set().union(*(closed[v] for v in subset)) == everyone:
                return k
    return g.n


def o_chromatic_number(g) -> int:
    edges = edge_set(g)
    order = list(range(g.n))

    def colorable(k: int) -> bool:
        coloring = {}

        def assign(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            for c in range(min(used + 1, k)):
                if all(coloring.get(w) != c for w in range(g.n)
                       if w in coloring and has_edge(edges, v, w)):
                    coloring[v] = c
                    if assign(i + 1, max(used, c + 1)):
                        return True
                    del coloring[v]
            return False

        return assign(0, 0)

    for k in range(1, g.n + 1):
        if colorable(k):
            return k
    return g.n


class _EdgeListGraph:
    """Minimal (n, edges) carrier so oracles can feed derived graphs to
    other oracles."""

    def __init__(self, n: int, edges):
        self.n = n
        self.edges = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def line_graph(g) -> _EdgeListGraph:
    base = list(g.edges)
    le = [(i, j) for i, j in itertools.combinations(range(len(base)), 2)
          if set(base[i]) & set(base[j])]
    return _EdgeListGraph(len(base), le)


def o_chromatic_index(g) -> int:
    if not g.edges:
        return 0
    return o_chromatic_number(line_graph(g))


def o_matching_number(g) -> int:
    edges = list(edge_set(g))
    for k in range(g.n // 2, 0, -1):
        for combo in itertools.combinations(edges, k):
            touched = [v for e in combo for v in e]
            if len(set(touched)) == 2 * k:
                return k
    return 0


def _spanning_forest_is_tree(n: int, chosen) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in chosen:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def o_number_of_spanning_trees(g) -> int:
    n = g.n
    if n == 1:
        return 1
    edges = list(g.edges)
    if len(edges) < n - 1:
        return 0
    return sum(1 for combo in itertools.combinations(edges, n - 1)
               if _spanning_forest_is_tree(n, combo))


def o_vertex_connectivity(g) -> int:
    n = g.n
    edges = edge_set(g)
    if len(edges) == n * (n - 1) // 2:
        return n - 1
    for k in range(n - 1):
        for cut in itertools.combinations(range(n), k):
            rest = [v for v in range(n) if v not in cut]
            sub = [(u, v) for u, v in edges if u in rest and v in rest]
            relabeled = {v: i for i, v in enumerate(rest)}
            h = _EdgeListGraph(len(rest), [(relabeled[u], relabeled[v])
                                           for u, v in sub])
            if h.n >= 2 and len(components(h.n, edge_set(h))) > 1:
                return k
    return n - 1


def o_edge_connectivity(g) -> int:
    if g.n == 1:
        return 0
    edges = list(edge_set(g))
    for k in range(len(edges) + 1):
        for cut in itertools.combinations(range(len(edges)), k):
            kept = [e for i, e in enumerate(edges) if i not in cut]
            if len(components(g.n, frozenset(kept))) > 1:
                return k
    return len(edges)


def o_hamiltonian(g) -> bool:
    if g.n < 3:
        return False
    edges = edge_set(g)
    for perm in itertools.permutations(range(1, g.n)):
        cycle = (0,) + perm
        if all(has_edge(edges, cycle[i], cycle[(i + 1) % g.n])
               for i in range(g.n)):
            return True
    return False


def o_traceable(g) -> bool:
    if g.n == 1:
        return True
    edges = edge_set(g)
    for perm in itertools.permutations(range(g.n)):
        if perm[0] > perm[-1]:
            continue
        if all(has_edge(edges, perm[i], perm[i + 1]) for i in range(g.n - 1)):
            return True
    return False


def _without_vertex(g, x: int) -> _EdgeListGraph:
    keep = [v for v in range(g.n) if v != x]
    relabeled = {v: i for i, v in enumerate(keep)}
    return _EdgeListGraph(g.n - 1, [(relabeled[u], relabeled[v])
                                    for u, v in g.edges if u != x and v != x])


def o_hypohamiltonian(g) -> bool:
    if g.n == 1:
        return False
    return (not o_hamiltonian(g)
            and all(o_hamiltonian(_without_vertex(g, x)) for x in range(g.n)))


def o_hypotraceable(g) -> bool:
    if g.n == 1:
        return False
    return (not o_traceable(g)
            and all(o_traceable(_without_vertex(g, x)) for x in range(g.n)))


def o_eulerian(g) -> bool:
    adj = adjacency(g.n, edge_set(g))
    if any(len(a) % 2 for a in adj):
        return False
    nontrivial = [c for c in components(g.n, edge_set(g)) if len(c) > 1]
    return len(nontrivial) <= 1


def o_bipartite(g) -> bool:
    edges = edge_set(g)
    for mask in range(1 << g.n):
        if all(((mask >> u) & 1) != ((mask >> v) & 1) for u, v in edges):
            return True
    return not edges


def o_claw_free(g) -> bool:
    edges = edge_set(g)
    for quad in itertools.combinations(range(g.n), 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if (all(has_edge(edges, center, v) for v in leaves)
                    and not any(has_edge(edges, u, v)
                                for u, v in itertools.combinations(leaves, 2))):
                return False
    return True


def o_planar(g) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(h)
    return ok


def o_genus(g) -> int:
    """Valid for n <= 7 only: every such graph is a subgraph of K7, which
    embeds in the torus, so the genus is 0 or 1. Two disjoint nonplanar
    components would need 10 vertices, so additivity never pushes past 1."""
    assert g.n <= 7
    return 0 if o_planar(g) else 1


def _embedding_genus(n: int, edges, rotations) -> int:
    """Genus of one rotation system of a connected graph, by face tracing."""
    succ = {}
    for v, order in enumerate(rotations):
        for i, w in enumerate(order):
            succ[(v, w)] = order[(i + 1) % len(order)]
    faces = 0
    seen = set()
    for a, b in edges:
        for dart in ((a, b), (b, a)):
            if dart in seen:
                continue
            faces += 1
            u, v = dart
            while (u, v) not in seen:
                seen.add((u, v))
                u, v = v, succ[(v, u)]
    return (2 - n + len(edges) - faces) // 2


def o_genus_rotation_systems(g) -> int:
    """Minimum genus by enumerating every rotation system outright. Only
    sensible when the product of (deg-1)! over vertices is small; the graph
    must be connected."""
    adj = adjacency(g.n, edge_set(g))
    pools = []
    for v in range(g.n):
        nbrs = sorted(adj[v])
        if len(nbrs) <= 2:
            pools.append([tuple(nbrs)])
        else:
            head = nbrs[0]
            pools.append([(head,) + rest
                          for rest in itertools.permutations(nbrs[1:])])
    best = None
    for combo in itertools.product(*pools):
        gen = _embedding_genus(g.n, g.edges, combo)
        if best is None or gen < best:
            best = gen
            if best == 0:
                break
    return best


def o_treewidth(g) -> int:
    """Minimum over all elimination orders of the maximum degree at
    elimination time in the progressively filled graph."""
    n = g.n
    if n == 1:
        return 0
    base = adjacency(n, edge_set(g))
    best = n - 1
    for order in itertools.permutations(range(n)):
        adj = [set(s) for s in base]
        width = 0
        alive = set(range(n))
        for v in order:
            nbrs = adj[v] & alive
            width = max(width, len(nbrs))
            if width >= best:
                break
            for a, b in itertools.combinations(nbrs, 2):
                adj[a].add(b)
                adj[b].add(a)
            alive.remove(v)
        else:
            best = min(best, width)
    return best


# ------------------------------------------------------------------ spectral


def _char_poly(matrix: list[list[Fraction]]) -> list[Fraction]:
    """Faddeev-LeVerrier: exact coefficients of det(xI - M), leading first."""
    n = len(matrix)
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            m[i][i] += coeffs[-1]
        prod = [[sum(matrix[i][t] * m[t][j] for t in range(n))
                 for j in range(n)] for i in range(n)]
        trace = sum(prod[i][i] for i in range(n))
        coeffs.append(-trace / k)
        m = prod
    return coeffs


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _poly_monic(p: list[Fraction]) -> list[Fraction]:
    lead = p[0]
    return [c / lead for c in p]


def _poly_derivative(p: list[Fraction]) -> list[Fraction]:
    d = len(p) - 1
    if d == 0:
        return [Fraction(0)]
    return [c * (d - i) for i, c in enumerate(p[:-1])]


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(c != 0 for c in a):
        shift = len(a) - len(b)
        factor = a[0] / b[0]
        q[len(q) - 1 - shift] = factor
        for i, c in enumerate(b):
            a[i] -= factor * c
        a = _poly_trim(a)
        if len(a) == 1 and a[0] == 0:
            break
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(a), _poly_trim(b)
    while not (len(b) == 1 and b[0] == 0):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return _poly_monic(a)


def _square_free_parts(p: list[Fraction]):
    """Yun's algorithm: yields (factor, multiplicity) with each factor
    square-free, so its numeric roots are all simple."""
    p = _poly_monic(_poly_trim(p))
    if len(p) == 1:
        return
    dp = _poly_derivative(p)
    g = _poly_gcd(p, dp)
    c, _ = _poly_divmod(p, g)
    d, _ = _poly_divmod(dp, g)
    d = _poly_trim([x - y for x, y in
                    itertools.zip_longest(reversed(d),
                                          reversed(_poly_derivative(c)),
                                          fillvalue=Fraction(0))][::-1])
    i = 1
    while len(c) > 1:
        f = _poly_gcd(c, d)
        if len(f) > 1:
            yield f, i
        c, _ = _poly_divmod(c, f)
        rem, _ = _poly_divmod(d, f)
        d = _poly_trim([x - y for x, y in
                        itertools.zip_longest(reversed(rem),
                                              reversed(_poly_derivative(c)),
                                              fillvalue=Fraction(0))][::-1])
        i += 1


def _real_roots(coeffs: list[Fraction]) -> list[float]:
    """All roots with multiplicity. Square-free factors first, so the
    numeric step never sees a repeated root."""
    out = []
    for factor, mult in _square_free_parts(list(coeffs)):
        arr = np.array([float(c) for c in factor], dtype=float)
        for r in np.roots(arr):
            out.extend([float(r.real)] * mult)
    return sorted(out)


@lru_cache(maxsize=None)
def _adjacency_roots(n: int, edges) -> tuple[float, ...]:
    mat = [[Fraction(0)] * n for _ in range(n)]
    for u, v in edges:
        mat[u][v] = mat[v][u] = Fraction(1)
    return tuple(_real_roots(_char_poly(mat)))


@lru_cache(maxsize=None)
def _laplacian_poly(n: int, edges) -> tuple[Fraction, ...]:
    mat = [[Fraction(0)] * n for _ in range(n)]
    for u, v in edges:
        mat[u][v] = mat[v][u] = Fraction(-1)
        mat[u][u] += 1
        mat[v][v] += 1
    return tuple(_char_poly(mat))


@lru_cache(maxsize=None)
def _laplacian_roots(n: int, edges) -> tuple[float, ...]:
    return tuple(_real_roots(list(_laplacian_poly(n, edges))))


def o_index(g) -> float:
    return _adjacency_roots(g.n, g.edges)[-1]


def o_smallest_eigenvalue(g) -> float:
    return _adjacency_roots(g.n, g.edges)[0]


def o_second_largest_eigenvalue(g) -> float:
    roots = _adjacency_roots(g.n, g.edges)
    return roots[-2] if len(roots) > 1 else 0.0


def o_number_of_zero_eigenvalues(g) -> int:
    """Multiplicity of the zero root, read exactly off trailing zero
    coefficients of the characteristic polynomial."""
    mat = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        mat[u][v] = mat[v][u] = Fraction(1)
    coeffs = _char_poly(mat)
    count = 0
    for c in reversed(coeffs):
        if c != 0:
            break
        count += 1
    return count


def o_laplacian_largest_eigenvalue(g) -> float:
    return _laplacian_roots(g.n, g.edges)[-1]


def o_algebraic_connectivity(g) -> float:
    roots = _laplacian_roots(g.n, g.edges)
    return roots[1] if len(roots) > 1 else 0.0


# ---------------------------------------------------------------- symmetry


def _automorphisms(g) -> list[tuple[int, ...]]:
    """Every adjacency-preserving permutation, by incremental placement."""
    n = g.n
    edges = edge_set(g)
    adj = adjacency(n, edges)
    deg = [len(a) for a in adj]
    found = []
    image = [-1] * n
    taken = [False] * n

    def place(v: int) -> None:
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if taken[w] or deg[w] != deg[v]:
                continue
            if all(has_edge(edges, w, image[u]) == has_edge(edges, v, u)
                   for u in range(v)):
                image[v] = w
                taken[w] = True
                place(v + 1)
                taken[w] = False
        image[v] = -1

    place(0)
    return found


def o_group_size(g) -> int:
    return len(_automorphisms(g))


def o_number_of_vertex_orbits(g) -> int:
    autos = _automorphisms(g)
    seen = set()
    orbits = 0
    for v in range(g.n):
        if v in seen:
            continue
        orbits += 1
        seen |= {a[v] for a in autos}
    return orbits


ORACLES = {
    "acyclic": o_acyclic,
    "bipartite": o_bipartite,
    "claw_free": o_claw_free,
    "connected": o_connected,
    "eulerian": o_eulerian,
    "hamiltonian": o_hamiltonian,
    "hypohamiltonian": o_hypohamiltonian,
    "hypotraceable": o_hypotraceable,
    "planar": o_planar,
    "regular": o_regular,
    "traceable": o_traceable,
    "algebraic_connectivity": o_algebraic_connectivity,
    "average_degree": o_average_degree,
    "chromatic_index": o_chromatic_index,
    "chromatic_number": o_chromatic_number,
    "circumference": o_circumference,
    "clique_number": o_clique_number,
    "density": o_density,
    "diameter": o_diameter,
    "domination_number": o_domination_number,
    "edge_connectivity": o_edge_connectivity,
    "genus": o_genus,
    "girth": o_girth,
    "group_size": o_group_size,
    "independence_number": o_independence_number,
    "index": o_index,
    "laplacian_largest_eigenvalue": o_laplacian_largest_eigenvalue,
    "longest_induced_cycle": o_longest_induced_cycle,
    "longest_induced_path": o_longest_induced_path,
    "matching_number": o_matching_number,
    "maximum_degree": o_maximum_degree,
    "minimum_degree": o_minimum_degree,
    "number_of_components": o_number_of_components,
    "number_of_edges": o_number_of_edges,
    "number_of_spanning_trees": o_number_of_spanning_trees,
    "number_of_triangles": o_number_of_triangles,
    "number_of_vertex_orbits": o_number_of_vertex_orbits,
    "number_of_vertices": o_number_of_vertices,
    "number_of_zero_eigenvalues": o_number_of_zero_eigenvalues,
    "radius": o_radius,
    "second_largest_eigenvalue": o_second_largest_eigenvalue,
    "smallest_eigenvalue": o_smallest_eigenvalue,
    "treewidth": o_treewidth,
    "vertex_connectivity": o_vertex_connectivity,
}

REAL_VALUED = {
    "algebraic_connectivity", "average_degree", "density", "index",
    "laplacian_largest_eigenvalue", "second_largest_eigenvalue",
    "smallest_eigenvalue",
}
