"""Degree and size invariants: direct counting."""

from __future__ import annotations

from ..budget import Budget
from ..core import Graph


def number_of_vertices(g: Graph, budget: Budget) -> int:
    return g.n


def number_of_edges(g: Graph, budget: Budget) -> int:
    return g.m


def minimum_degree(g: Graph, budget: Budget) -> int:
    return min(len(a) for a in g.adj)


def maximum_degree(g: Graph, budget: Budget) -> int:
    return max(len(a) for a in g.adj)


def average_degree(g: Graph, budget: Budget) -> float:
    return 2 * g.m / g.n


def density(g: Graph, budget: Budget) -> float:
    if g.n < 2:
        return 0.0
    return g.m / (g.n * (g.n - 1) / 2)


def regular(g: Graph, budget: Budget) -> bool:
    return minimum_degree(g, budget) == maximum_degree(g, budget)
