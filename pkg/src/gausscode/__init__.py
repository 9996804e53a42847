"""Gauss code realizability and combinatorial plane embeddings.

Decide whether a double occurrence word or paragraph is realizable as
the crossing sequence of closed curves in the plane, and when it is,
construct explicit combinatorial embeddings (rotation systems) via
Seifert maps and the vertex-medial operation.  An exhaustive oracle and
an all-embeddings enumerator back the fast path for verification.
"""

from ._kernels import available_backends, current_backend, set_backend
from .maps_core import (
    BlockTree,
    CombMap,
    InvalidMap,
    block_cut_tree,
    connected_components,
    faces,
    genus,
    is_bipartite,
    make_map,
    map_from_json,
    map_to_dot,
    map_to_json,
)
from .medial import (
    mirror_map,
    straight_ahead,
    trace_paragraph,
    vertex_medial_map,
    vertex_medial_premap,
)
from .orientation_alg import (
    BridgeGraph,
    Diagnostics,
    NonPlanarSv,
    SideAssignment,
    build_bridge_graph,
    conflict_and_embed,
    label_and_orient,
    orient_map,
)
from .recognizer import (
    EmbedResult,
    NotRealizable,
    OracleReport,
    TooLarge,
    embed_paragraph,
    enumerate_embeddings,
    is_gauss,
    oracle_min_genus,
    random_gauss,
)
from .seifert import (
    NotTwoTwo,
    SeifertCycle,
    TwoTwoPremap,
    as_premap,
    cycle_trace,
    premap_from_paragraph,
    seifert_cycles,
    seifert_map,
    seifert_oriented,
    seifert_successor,
)
from .words import (
    DoubleOccurrenceViolation,
    Paragraph,
    Word,
    cyclic_equal,
    format_paragraph,
    parity_precheck,
    parse_paragraph,
)

__version__ = "0.1.0"

__all__ = [
    "available_backends",
    "current_backend",
    "set_backend",
    "BlockTree",
    "CombMap",
    "InvalidMap",
    "block_cut_tree",
    "connected_components",
    "faces",
    "genus",
    "is_bipartite",
    "make_map",
    "map_from_json",
    "map_to_dot",
    "map_to_json",
    "mirror_map",
    "straight_ahead",
    "trace_paragraph",
    "vertex_medial_map",
    "vertex_medial_premap",
    "BridgeGraph",
    "Diagnostics",
    "NonPlanarSv",
    "SideAssignment",
    "build_bridge_graph",
    "conflict_and_embed",
    "label_and_orient",
    "orient_map",
    "EmbedResult",
    "NotRealizable",
    "OracleReport",
    "TooLarge",
    "embed_paragraph",
    "enumerate_embeddings",
    "is_gauss",
    "oracle_min_genus",
    "random_gauss",
    "NotTwoTwo",
    "SeifertCycle",
    "TwoTwoPremap",
    "as_premap",
    "cycle_trace",
    "premap_from_paragraph",
    "seifert_cycles",
    "seifert_map",
    "seifert_oriented",
    "seifert_successor",
    "DoubleOccurrenceViolation",
    "Paragraph",
    "Word",
    "cyclic_equal",
    "format_paragraph",
    "parity_precheck",
    "parse_paragraph",
]
