"""Canonical labeling, isomorphism testing, and automorphism groups.

The search is the classic individualization-refinement scheme: refine an
ordered partition of the vertices to an equitable fixpoint, branch on the
vertices of a target cell, and read a labeled adjacency certificate off each
discrete leaf. The canonical form is the lexicographically smallest
certificate over all leaves; leaves with equal certificates yield
automorphisms, which prune the remaining tree through vertex orbits.

Not built for speed parity with the specialized tools; built to be correct,
deterministic, and fully testable against brute force.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .budget import NO_BUDGET, Budget
from .codecs import graph6_encode
from .core import Graph, inverse_permutation, relabel


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical graph6 string plus the permutation that produces it.

    relabel(g, permutation) encodes to exactly `graph6`.
    """

    graph6: str
    permutation: tuple[int, ...]


@dataclass(frozen=True)
class AutomorphismSummary:
    group_size: int
    orbit_count: int
    orbits: tuple[tuple[int, ...], ...]


def _refine(bits: tuple[int, ...], partition: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts into the cells of
    the previous sweep, until a full sweep changes nothing."""
    while True:
        changed = False
        splitters = [sum(1 << v for v in cell) for cell in partition]
        for smask in splitters:
            new_partition = []
            for cell in partition:
                if len(cell) == 1:
                    new_partition.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((bits[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_partition.append(cell)
                else:
                    changed = True
                    for key in sorted(groups):
                        new_partition.append(groups[key])
            partition = new_partition
        if not changed:
            return partition


def _certificate(bits: tuple[int, ...], lab: list[int]) -> bytes:
    """Adjacency bits of the relabeled graph, upper triangle in column order.
    lab[i] = original vertex placed at position i."""
    out = bytearray()
    for v in range(1, len(lab)):
        row = bits[lab[v]]
        out.extend(1 if row >> lab[u] & 1 else 0 for u in range(v))
    return bytes(out)


def _target_cell_index(partition: list[list[int]]) -> int:
    """Earliest cell among those of minimum size > 1, or -1 if discrete."""
    best = -1
    best_size = None
    for i, cell in enumerate(partition):
        size = len(cell)
        if size > 1 and (best_size is None or size < best_size):
            best = i
            best_size = size
    return best


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _orbit_partition(n: int, generators: list[list[int]]) -> _UnionFind:
    uf = _UnionFind(n)
    for p in generators:
        for v in range(n):
            uf.union(v, p[v])
    return uf


class _Search:
    """One canonical search over a single graph."""

    def __init__(self, g: Graph, budget: Budget):
        self.n = g.n
        self.bits = g.bits
        self.budget = budget
        self.generators: list[list[int]] = []
        self.first_lab: list[int] | None = None
        self.first_cert: bytes | None = None
        self.first_base: list[int] = []
        self.best_lab: list[int] | None = None
        self.best_cert: bytes | None = None
        self.jump_to: int | None = None

    def run(self) -> None:
        root = _refine(self.bits, [list(range(self.n))])
        self._node(root, [], 0)

    def _leaf(self, partition: list[list[int]], base: list[int]) -> None:
        lab = [cell[0] for cell in partition]
        cert = _certificate(self.bits, lab)
        if self.first_cert is None:
            self.first_lab = lab
            self.first_cert = cert
            self.first_base = list(base)
            self.best_lab = lab
            self.best_cert = cert
            return
        if cert == self.first_cert and lab != self.first_lab:
            # sigma maps this leaf's labeling onto the first leaf's: an
            # automorphism. It fixes the common prefix of the two base
            # sequences, so everything deeper than that prefix is already
            # covered by the first subtree; unwind to the fork depth.
            first_lab = self.first_lab
            assert first_lab is not None
            sigma = [0] * self.n
            for i in range(self.n):
                sigma[lab[i]] = first_lab[i]
            self.generators.append(sigma)
            depth = 0
            while (depth < len(base) and depth < len(self.first_base)
                   and base[depth] == self.first_base[depth]):
                depth += 1
            self.jump_to = depth
        if self.best_cert is None or cert < self.best_cert:
            self.best_lab = lab
            self.best_cert = cert

    def _node(self, partition: list[list[int]], base: list[int], depth: int) -> None:
        self.budget.check()
        t = _target_cell_index(partition)
        if t < 0:
            self._leaf(partition, base)
            return
        cell = sorted(partition[t])
        tried: list[int] = []
        for v in cell:
            if tried:
                uf = _orbit_partition(self.n, self._fixing_generators(base))
                if any(uf.find(v) == uf.find(u) for u in tried):
                    continue
            child = partition[:t] + [[v], [u for u in partition[t] if u != v]] + partition[t + 1:]
            self._node(_refine(self.bits, child), base + [v], depth + 1)
            tried.append(v)
            if self.jump_to is not None:
                if self.jump_to < depth:
                    return
                self.jump_to = None

    def _fixing_generators(self, base: list[int]) -> list[list[int]]:
        return [p for p in self.generators if all(p[b] == b for b in base)]


def _group_order(n: int, generators: list[list[int]]) -> int:
    """Exact order of the permutation group generated by `generators`,
    via a Schreier-Sims stabilizer chain (arbitrary precision)."""
    if not generators:
        return 1
    base: list[int] = []
    strong: list[list[list[int]]] = []  # generators per chain level
    transversals: list[dict[int, list[int]]] = []

    def orbit_transversal(level: int) -> None:
        b = base[level]
        gens = strong[level]
        trans = {b: list(range(n))}
        frontier = [b]
        while frontier:
            x = frontier.pop()
            for p in gens:
                y = p[x]
                if y not in trans:
                    trans[y] = _compose(p, trans[x])
                    frontier.append(y)
        transversals[level] = trans

    def strip(p: list[int], level: int) -> tuple[list[int], int]:
        for i in range(level, len(base)):
            x = p[base[i]]
            trans = transversals[i]
            if x not in trans:
                return p, i
            p = _compose(_invert(trans[x]), p)
        return p, len(base)

    def add_generator(p: list[int], level: int) -> None:
        residue, drop = strip(p, level)
        if _is_identity(residue):
            return
        while len(base) <= drop:
            moved = next(x for x in range(n) if residue[x] != x)
            base.append(moved)
            strong.append([])
            transversals.append({})
        for i in range(level, drop + 1):
            strong[i].append(residue)
        for i in range(drop, level - 1, -1):
            orbit_transversal(i)
            # sift Schreier generators of this level
            trans = transversals[i]
            for x in list(trans):
                for q in strong[i]:
                    sgen = _compose(_invert(trans[q[x]]), _compose(q, trans[x]))
                    if not _is_identity(sgen):
                        add_generator(sgen, i + 1)

    for p in generators:
        add_generator(list(p), 0)
    order = 1
    for trans in transversals:
        order *= len(trans)
    return order


def _compose(p: list[int], q: list[int]) -> list[int]:
    """(p compose q)(x) = p[q[x]]."""
    return [p[x] for x in q]


def _invert(p: list[int]) -> list[int]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return inv


def _is_identity(p: list[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def _searched(g: Graph, budget: Budget) -> _Search:
    if g.n > 200:
        limit = sys.getrecursionlimit()
        needed = 4 * g.n + 200
        if limit < needed:
            sys.setrecursionlimit(needed)
    search = _Search(g, budget)
    search.run()
    return search


def canonical_form(g: Graph, budget: Budget = NO_BUDGET) -> CanonicalForm:
    """Deterministic canonical representative of g's isomorphism class."""
    search = _searched(g, budget)
    lab = search.best_lab
    assert lab is not None
    perm = tuple(inverse_permutation(lab))
    return CanonicalForm(graph6_encode(relabel(g, perm)), perm)


def canonical_key(g: Graph, budget: Budget = NO_BUDGET) -> str:
    return canonical_form(g, budget).graph6


def are_isomorphic(g1: Graph, g2: Graph, budget: Budget = NO_BUDGET) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(len(a) for a in g1.adj) != sorted(len(a) for a in g2.adj):
        return False
    return canonical_key(g1, budget) == canonical_key(g2, budget)


def automorphisms(g: Graph, budget: Budget = NO_BUDGET) -> AutomorphismSummary:
    """Exact automorphism group size and vertex orbits."""
    search = _searched(g, budget)
    uf = _orbit_partition(g.n, search.generators)
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(uf.find(v), []).append(v)
    orbits = tuple(tuple(sorted(cell)) for cell in
                   sorted(cells.values(), key=lambda c: c[0]))
    return AutomorphismSummary(
        group_size=_group_order(g.n, search.generators),
        orbit_count=len(orbits),
        orbits=orbits,
    )
