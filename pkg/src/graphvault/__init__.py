"""graphvault: a self-hostable database of interesting graphs.

Graphs come in through the codecs (graph6, multicode, adjacency text), are
deduplicated by canonical form, and get their invariants computed under a
multilevel feedback queue. Everything is reachable from Python, the command
line, and HTTP.
"""

from .budget import NO_BUDGET, Budget
from .canonical import (
    AutomorphismSummary,
    CanonicalForm,
    are_isomorphic,
    automorphisms,
    canonical_form,
    canonical_key,
)
from .codecs import (
    EncodedGraph,
    FORMATS,
    graph6_decode,
    graph6_encode,
    multicode_decode,
    multicode_encode,
    normalize_format,
)
from .core import Graph, build_graph, complement, relabel, subgraph_induced
from .errors import (
    CodecError,
    ComputationInterrupted,
    GraphError,
    GraphVaultError,
    MalformedQueryError,
    NotFoundError,
    StoreError,
    UnknownFormatError,
    UnknownInvariantError,
)
from .invariants import REGISTRY, compute, get_invariant, list_invariants
from .layout import ExportOptions, LayoutParams, continue_embed, export_svg, export_tikz, spring_embed
from .scheduler import JobQueue, QueueConfig, ThreadedScheduler, simulate
from .store import Store, UploadResult, make_computer

__version__ = "0.1.0"

__all__ = [
    "AutomorphismSummary",
    "Budget",
    "CanonicalForm",
    "CodecError",
    "ComputationInterrupted",
    "EncodedGraph",
    "ExportOptions",
    "FORMATS",
    "Graph",
    "GraphError",
    "GraphVaultError",
    "JobQueue",
    "LayoutParams",
    "MalformedQueryError",
    "NO_BUDGET",
    "NotFoundError",
    "QueueConfig",
    "REGISTRY",
    "Store",
    "StoreError",
    "ThreadedScheduler",
    "UnknownFormatError",
    "UnknownInvariantError",
    "UploadResult",
    "are_isomorphic",
    "automorphisms",
    "build_graph",
    "canonical_form",
    "canonical_key",
    "complement",
    "compute",
    "continue_embed",
    "export_svg",
    "export_tikz",
    "get_invariant",
    "graph6_decode",
    "graph6_encode",
    "list_invariants",
    "make_computer",
    "multicode_decode",
    "multicode_encode",
    "normalize_format",
    "relabel",
    "simulate",
    "spring_embed",
    "subgraph_induced",
]
