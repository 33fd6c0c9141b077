"""Zagreb-index machinery for connected graphs with cut vertices.

The package computes both Zagreb indices, analyses block/cut-vertex
structure, applies the index-decreasing rewrites, and verifies the sharp
lower bounds M1 >= 4n+2 and M2 >= 4n+4 (over n-vertex connected graphs with
k cut vertices and a cycle) by isomorphism-free exhaustive enumeration.
"""

from . import errors
from .canon import (
    CANON_SIZE_LIMIT,
    ENUMERATION_SIZE_LIMIT,
    canonical_form,
    enumerate_connected,
    is_isomorphic,
)
from .extremal import (
    ExtremalReport,
    MinimizeTrace,
    NO_K_PRESERVING_SITE,
    NO_SITE,
    REACHED_CNK,
    TraceStep,
    has_mismatch,
    minimize,
    report_to_dict,
    reports_to_csv,
    reports_to_json,
    verify_range,
    verify_theorem,
)
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    emit_g6,
    parse_g6,
    path_graph,
    star_graph,
)
from .indices import (
    IndexPair,
    claimed_minima,
    gap_f,
    gap_g,
    index_pair,
    zagreb_m1,
    zagreb_m2,
)
from .rewrites import (
    RewriteKind,
    RewriteOutcome,
    RewriteSite,
    apply_site,
    block_edge_delete,
    find_sites,
    merge_identified,
    op_i,
    op_i_b,
    op_ii,
    op_iii,
    op_iv,
    path_merge,
)
from .structure import (
    BlockDecomposition,
    PendantPath,
    PendantStructure,
    PendantTree,
    construct_cnk,
    cut_vertices,
    cycle_edges,
    decompose,
    hanging_paths,
    in_vnk,
    is_cnk,
    is_cycle_block,
    pendant_structure,
    two_core,
    vertex_on_cycle,
)

__version__ = "0.1.0"
