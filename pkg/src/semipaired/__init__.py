"""Solvers, verifiers and reduction gadgets for semipaired domination."""

from .errors import BoundExceeded, FormatError, InvalidGraphError, NotATreeError, SemipairedError
from .exact import (
    OracleResult,
    domination_chain,
    exact_domination,
    exact_paired_domination,
    exact_semi_pd,
    exact_vertex_cover,
)
from .graph import (
    Graph,
    VertexSet,
    build_graph,
    closed_neighborhood,
    complete_graph,
    cycle_graph,
    distance,
    is_connected,
    is_dominating,
    is_tree,
    path_graph,
    star_graph,
    vertices_within_2,
)
from .greedy import GreedyTrace, RatioCertificate, approx_semi_paired, harmonic, ratio_certificate
from .interval import (
    IntervalModel,
    LeftEndOrdering,
    compute_indices,
    interval_graph_from_model,
    interval_trace,
    left_end_order,
    semi_paired_dom_interval,
    solve_model,
)
from .reductions import (
    ReductionOutput,
    dom_to_semipd_hardness,
    dom_to_semipd_split,
    extract_dominating_set,
    gp4_from,
    vc_to_semipd_bipartite,
)
from .tree import bfs_order_from_pendant, semi_paired_dom_tree, tree_sweep
from .verify import SemipairedSolution, Verdict, find_pairing, verify_solution

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
