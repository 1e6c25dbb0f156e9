"""Clique counts, long cycles, and extremal graph families at desk scale."""
from .canon import canonical_form, canonical_graph, is_isomorphic
from .cliques import (
    CliqueCensus,
    census,
    count_cliques,
    count_cliques_oracle,
    decompose_nc,
    decompose_nk,
    f_formula,
    g_formula,
    h_formula,
)
from .constructions import build_F, build_H, build_X, build_fan_variant, build_woodall_variant
from .cycles import (
    BudgetExceeded,
    circumference,
    circumference_oracle,
    max_cycle_through_edge,
    short_edges,
    xi,
)
from .enumeration import EnumerationSpec, enumerate_graphs, import_graph6_corpus
from .graph import (
    BlockDecomposition,
    Graph,
    GraphError,
    block_decomposition,
    build,
    complement,
    disjoint_union,
    is_connected,
    is_two_connected,
    join,
    two_cuts,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .transforms import ClosureResult, all_closures, closure_L, closure_M, contract_edge, edge_switch
from .verify import VerificationReport

__version__ = "0.1.0"
