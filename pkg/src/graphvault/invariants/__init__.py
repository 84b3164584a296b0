"""Invariant registry: 44 graph invariants, each a budgeted computation.

Identifiers are stable snake_case strings; the registry order is booleans
then numerics, alphabetical within each block. Sentinel conventions that a
standard definition leaves open are spelled out in each definition string
and shared with the test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .. import canonical
from ..budget import NO_BUDGET, Budget
from ..core import Graph
from ..errors import UnknownInvariantError
from . import (
    connectivity,
    cycles,
    degree,
    hamiltonicity,
    matching,
    nphard,
    spectral,
    structure,
)

BOOLEAN = "boolean"
INTEGER = "integer"
REAL = "real"

RawValue = Union[bool, int, float]


@dataclass(frozen=True)
class InvariantValue:
    kind: str
    value: RawValue

    def render(self) -> str:
        return format_value(self.kind, self.value)


@dataclass(frozen=True)
class InvariantDef:
    invariant_id: str
    kind: str
    display_name: str
    definition: str
    fn: Callable[[Graph, Budget], RawValue]


def _group_size(g: Graph, budget: Budget) -> int:
    return canonical.automorphisms(g, budget).group_size


def _vertex_orbits(g: Graph, budget: Budget) -> int:
    return canonical.automorphisms(g, budget).orbit_count


_DEFS = [
    InvariantDef("acyclic", BOOLEAN, "Acyclic",
                 "True when the graph contains no cycle.", cycles.acyclic),
    InvariantDef("bipartite", BOOLEAN, "Bipartite",
                 "True when the vertices split into two independent sets.",
                 structure.bipartite),
    InvariantDef("claw_free", BOOLEAN, "Claw-Free",
                 "True when no induced subgraph is the star K1,3.",
                 structure.claw_free),
    InvariantDef("connected", BOOLEAN, "Connected",
                 "True when every vertex pair is joined by a path; true for the "
                 "one-vertex graph.", connectivity.connected),
    InvariantDef("eulerian", BOOLEAN, "Eulerian",
                 "True when a closed walk uses every edge exactly once: all "
                 "degrees even and at most one component carries edges. "
                 "Edgeless graphs count as eulerian.", hamiltonicity.eulerian),
    InvariantDef("hamiltonian", BOOLEAN, "Hamiltonian",
                 "True when a spanning cycle exists; false below 3 vertices.",
                 hamiltonicity.hamiltonian),
    InvariantDef("hypohamiltonian", BOOLEAN, "Hypohamiltonian",
                 "True when the graph is not hamiltonian but every "
                 "vertex-deleted subgraph is; false for the one-vertex graph.",
                 hamiltonicity.hypohamiltonian),
    InvariantDef("hypotraceable", BOOLEAN, "Hypotraceable",
                 "True when the graph is not traceable but every "
                 "vertex-deleted subgraph is; false for the one-vertex graph.",
                 hamiltonicity.hypotraceable),
    InvariantDef("planar", BOOLEAN, "Planar",
                 "True when the graph embeds in the plane without crossings "
                 "(genus 0).", structure.planar),
    InvariantDef("regular", BOOLEAN, "Regular",
                 "True when all degrees are equal.", degree.regular),
    InvariantDef("traceable", BOOLEAN, "Traceable",
                 "True when a spanning path exists; true for the one-vertex "
                 "graph.", hamiltonicity.traceable),
    InvariantDef("algebraic_connectivity", REAL, "Algebraic Connectivity",
                 "Second-smallest Laplacian eigenvalue; 0 for the one-vertex "
                 "graph.", spectral.algebraic_connectivity),
    InvariantDef("average_degree", REAL, "Average Degree",
                 "Twice the edge count divided by the vertex count.",
                 degree.average_degree),
    InvariantDef("chromatic_index", INTEGER, "Chromatic Index",
                 "Minimum colors in a proper edge coloring; 0 for edgeless "
                 "graphs.", nphard.chromatic_index),
    InvariantDef("chromatic_number", INTEGER, "Chromatic Number",
                 "Minimum colors in a proper vertex coloring.",
                 nphard.chromatic_number),
    InvariantDef("circumference", INTEGER, "Circumference",
                 "Vertex count of a longest cycle; 0 when acyclic.",
                 cycles.circumference),
    InvariantDef("clique_number", INTEGER, "Clique Number",
                 "Order of a largest complete subgraph.", nphard.clique_number),
    InvariantDef("density", REAL, "Density",
                 "Edge count divided by the possible-edge count n(n-1)/2; "
                 "0 for the one-vertex graph.", degree.density),
    InvariantDef("diameter", INTEGER, "Diameter",
                 "Largest eccentricity; -1 when disconnected.",
                 connectivity.diameter),
    InvariantDef("domination_number", INTEGER, "Domination Number",
                 "Minimum size of a vertex set whose closed neighborhoods "
                 "cover the graph.", nphard.domination_number),
    InvariantDef("edge_connectivity", INTEGER, "Edge Connectivity",
                 "Minimum edges whose removal disconnects the graph; 0 when "
                 "already disconnected or on one vertex.",
                 connectivity.edge_connectivity),
    InvariantDef("genus", INTEGER, "Genus",
                 "Minimum orientable genus over all embeddings, summed over "
                 "components.", structure.genus),
    InvariantDef("girth", INTEGER, "Girth",
                 "Length of a shortest cycle; 0 when acyclic.", cycles.girth),
    InvariantDef("group_size", INTEGER, "Group Size",
                 "Order of the automorphism group.", _group_size),
    InvariantDef("independence_number", INTEGER, "Independence Number",
                 "Size of a largest independent set.",
                 nphard.independence_number),
    InvariantDef("index", REAL, "Index",
                 "Largest adjacency eigenvalue (spectral radius).",
                 spectral.index),
    InvariantDef("laplacian_largest_eigenvalue", REAL,
                 "Laplacian Largest Eigenvalue",
                 "Largest Laplacian eigenvalue.",
                 spectral.laplacian_largest_eigenvalue),
    InvariantDef("longest_induced_cycle", INTEGER, "Longest Induced Cycle",
                 "Vertex count of a largest chordless cycle; 0 when none "
                 "exists.", cycles.longest_induced_cycle),
    InvariantDef("longest_induced_path", INTEGER, "Longest Induced Path",
                 "Vertex count of a longest induced path; 1 for edgeless "
                 "graphs.", cycles.longest_induced_path),
    InvariantDef("matching_number", INTEGER, "Matching Number",
                 "Maximum number of pairwise disjoint edges.",
                 matching.matching_number),
    InvariantDef("maximum_degree", INTEGER, "Maximum Degree",
                 "Largest vertex degree.", degree.maximum_degree),
    InvariantDef("minimum_degree", INTEGER, "Minimum Degree",
                 "Smallest vertex degree.", degree.minimum_degree),
    InvariantDef("number_of_components", INTEGER, "Number of Components",
                 "Count of connected components.",
                 connectivity.number_of_components),
    InvariantDef("number_of_edges", INTEGER, "Number of Edges",
                 "Count of edges.", degree.number_of_edges),
    InvariantDef("number_of_spanning_trees", INTEGER,
                 "Number of Spanning Trees",
                 "Count of spanning trees; 1 for the one-vertex graph, 0 when "
                 "disconnected.", spectral.number_of_spanning_trees),
    InvariantDef("number_of_triangles", INTEGER, "Number of Triangles",
                 "Count of 3-cycles.", cycles.number_of_triangles),
    InvariantDef("number_of_vertex_orbits", INTEGER, "Number of Vertex Orbits",
                 "Count of vertex classes under the automorphism group.",
                 _vertex_orbits),
    InvariantDef("number_of_vertices", INTEGER, "Number of Vertices",
                 "Count of vertices.", degree.number_of_vertices),
    InvariantDef("number_of_zero_eigenvalues", INTEGER,
                 "Number of Zero Eigenvalues",
                 "Multiplicity of 0 in the adjacency spectrum.",
                 spectral.number_of_zero_eigenvalues),
    InvariantDef("radius", INTEGER, "Radius",
                 "Smallest eccentricity; -1 when disconnected.",
                 connectivity.radius),
    InvariantDef("second_largest_eigenvalue", REAL,
                 "Second Largest Eigenvalue",
                 "Second-largest adjacency eigenvalue; 0 for the one-vertex "
                 "graph.", spectral.second_largest_eigenvalue),
    InvariantDef("smallest_eigenvalue", REAL, "Smallest Eigenvalue",
                 "Smallest adjacency eigenvalue.", spectral.smallest_eigenvalue),
    InvariantDef("treewidth", INTEGER, "Treewidth",
                 "Minimum width over all tree decompositions.",
                 structure.treewidth),
    InvariantDef("vertex_connectivity", INTEGER, "Vertex Connectivity",
                 "Minimum vertices whose removal disconnects the graph; n-1 "
                 "for complete graphs, 0 when disconnected or on one vertex.",
                 connectivity.vertex_connectivity),
]

REGISTRY: dict[str, InvariantDef] = {d.invariant_id: d for d in _DEFS}

assert len(_DEFS) == 44
assert sum(1 for d in _DEFS if d.kind == BOOLEAN) == 11


def list_invariants() -> list[InvariantDef]:
    """All 44 registered invariants, in stable registry order."""
    return list(_DEFS)


def get_invariant(invariant_id: str) -> InvariantDef:
    try:
        return REGISTRY[invariant_id]
    except KeyError:
        raise UnknownInvariantError(invariant_id) from None


def compute(invariant_id: str, g: Graph, budget: Budget = NO_BUDGET) -> InvariantValue:
    """Compute one invariant; raises ComputationInterrupted past the budget."""
    d = get_invariant(invariant_id)
    raw = d.fn(g, budget)
    if d.kind == BOOLEAN:
        return InvariantValue(BOOLEAN, bool(raw))
    if d.kind == INTEGER:
        return InvariantValue(INTEGER, int(raw))
    return InvariantValue(REAL, float(raw))


def format_value(kind: str, value: RawValue) -> str:
    """Canonical text rendering: booleans lowercase, reals at 12 significant
    digits."""
    if kind == BOOLEAN:
        return "true" if value else "false"
    if kind == INTEGER:
        return str(int(value))
    return format(float(value), ".12g")


def parse_value(kind: str, text: str) -> RawValue:
    if kind == BOOLEAN:
        if text == "true":
            return True
        if text == "false":
            return False
        raise ValueError(f"not a boolean rendering: {text!r}")
    if kind == INTEGER:
        return int(text)
    return float(text)
