"""Spectral invariants and the spanning-tree count.

Eigenvalues come from a dense symmetric eigensolver; the spanning-tree count
never touches floating point: it is the determinant of a Laplacian minor
computed by fraction-free Bareiss elimination over Python integers, so the
result is exact at any magnitude.
"""

from __future__ import annotations

import numpy as np

from ..budget import Budget
from ..core import Graph

_ZERO_TOL = 1e-8


def _adjacency_spectrum(g: Graph) -> np.ndarray:
    """Adjacency eigenvalues, ascending."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return np.linalg.eigvalsh(a)


def _laplacian_spectrum(g: Graph) -> np.ndarray:
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1.0
    for v in range(g.n):
        lap[v, v] = len(g.adj[v])
    return np.linalg.eigvalsh(lap)


def index(g: Graph, budget: Budget) -> float:
    return float(_adjacency_spectrum(g)[-1])


def second_largest_eigenvalue(g: Graph, budget: Budget) -> float:
    """Second-largest adjacency eigenvalue; 0 for the one-vertex graph,
    whose spectrum has a single entry."""
    eigs = _adjacency_spectrum(g)
    return float(eigs[-2]) if g.n >= 2 else 0.0


def smallest_eigenvalue(g: Graph, budget: Budget) -> float:
    return float(_adjacency_spectrum(g)[0])


def number_of_zero_eigenvalues(g: Graph, budget: Budget) -> int:
    eigs = _adjacency_spectrum(g)
    return int(np.sum(np.abs(eigs) < _ZERO_TOL))


def laplacian_largest_eigenvalue(g: Graph, budget: Budget) -> float:
    return float(_laplacian_spectrum(g)[-1])


def algebraic_connectivity(g: Graph, budget: Budget) -> float:
    """Second-smallest Laplacian eigenvalue; 0 for the one-vertex graph."""
    if g.n < 2:
        return 0.0
    return float(_laplacian_spectrum(g)[1])


def number_of_spanning_trees(g: Graph, budget: Budget) -> int:
    """Exact count via the matrix-tree theorem: determinant of the Laplacian
    with row and column 0 removed. 1 for K1, 0 when disconnected."""
    n = g.n
    if n == 1:
        return 1
    minor = [[0] * (n - 1) for _ in range(n - 1)]
    for v in range(1, n):
        minor[v - 1][v - 1] = len(g.adj[v])
    for u, v in g.edges:
        if u >= 1 and v >= 1:
            minor[u - 1][v - 1] = -1
            minor[v - 1][u - 1] = -1
    return abs(_det_bareiss(minor, budget))


def _det_bareiss(m: list[list[int]], budget: Budget) -> int:
    """Fraction-free determinant; mutates its argument."""
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        budget.check()
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if m[i][k] != 0), -1)
            if pivot < 0:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pivot_val = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot_val - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot_val
    return sign * m[size - 1][size - 1]
