"""Chordless (induced) st-path and cycle listing with amortized O~(n) delay."""

from .bruteforce import brute_chordless_cycles, brute_chordless_st_paths, brute_good_neighbors, is_chordless
from .connectivity import (
    ConnectivityOracle,
    DynamicConnectivity,
    OracleOpCounters,
    ReferenceConnectivity,
    attach,
)
from .generators import (
    gen_bipartite_path,
    gen_complete,
    gen_cycle,
    gen_fig5_left,
    gen_fig5_right,
    gen_gnm,
)
from .graph import ContractError, Graph, RemovalRecord
from .io import read_graph, write_edge_list
from .listing import (
    DistanceLabels,
    EnumStats,
    GoodEntry,
    canonical_cycle,
    cleanup_good_neighbors,
    closest_good_neighbor,
    list_chordless_cycles,
    list_st_paths,
    relabel_certificate,
)

__all__ = [
    "ConnectivityOracle", "ContractError", "DistanceLabels", "DynamicConnectivity", "EnumStats",
    "GoodEntry", "Graph", "OracleOpCounters", "ReferenceConnectivity", "RemovalRecord", "attach",
    "brute_chordless_cycles", "brute_chordless_st_paths", "brute_good_neighbors", "canonical_cycle",
    "cleanup_good_neighbors", "closest_good_neighbor", "gen_bipartite_path", "gen_complete",
    "gen_cycle", "gen_fig5_left", "gen_fig5_right", "gen_gnm", "is_chordless", "list_chordless_cycles",
    "list_st_paths", "read_graph", "relabel_certificate", "write_edge_list",
]
