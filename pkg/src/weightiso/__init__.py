"""Graph isomorphism testing from exact solutions of the vertex-weight system."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph,
    GraphFormatError,
    Permutation,
    encode_graph6,
    generate,
    is_connected,
    named,
    parse_edge_list,
    parse_graph6,
    permute,
    random_connected,
    random_regular,
    to_edge_list,
)
from .isotest import (  # noqa: E402
    DisconnectedGraphError,
    InputError,
    IsoResult,
    algorithm1,
    p1,
    refine,
    verify,
)
from .matcher import Bigraph, build_bigraph, intersect, transversal  # noqa: E402
from .oracle import HuntConfig, HuntReport, brute_force_iso, hunt  # noqa: E402
from .weights import KMatrix, check_bounds, k_matrix, solve_system, topo_index  # noqa: E402

__all__ = [
    "Bigraph", "DisconnectedGraphError", "Graph", "GraphFormatError", "HuntConfig",
    "HuntReport", "InputError", "IsoResult", "KMatrix", "Permutation", "algorithm1",
    "brute_force_iso", "build_bigraph", "check_bounds", "encode_graph6", "generate",
    "hunt", "intersect", "is_connected", "k_matrix", "named", "p1", "parse_edge_list",
    "parse_graph6", "permute", "random_connected", "random_regular", "refine",
    "solve_system", "to_edge_list", "topo_index", "transversal", "verify",
]
