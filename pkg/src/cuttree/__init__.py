"""Gomory-Hu cut trees for large sparse undirected graphs.

Build once, then answer any pairwise minimum-cut / connectivity query from
the tree, and derive whole-graph statistics (connectivity distribution,
connectivity dendrogram) in near-linear time.
"""

from .analytics import (
    Dendrogram,
    DisjointSets,
    connectivity_dendrogram,
    connectivity_distribution,
)
from .builder import GHNode, GHState, TreeEdge, init
from .flow import (
    DinitzEngine,
    FlowState,
    max_flow_bidir,
    max_flow_unidir,
    min_cut_from_flow,
    residual_reachable,
)
from .goal import SinkLabels, bfs_from_sink, goal_flow, goal_oriented_sweep
from .graph import (
    UndirectedGraph,
    VertexMapping,
    connected_components,
    extract_subgraph,
    normalize,
)
from .packing import Packing, apply_packing, find_trivial_cuts, greedy_pack
from .pipeline import (
    BuildConfig,
    BuildStats,
    construct,
    separate_adjacent_pairs,
    separate_high_degree_pairs,
)
from .reduce import (
    BridgeDecomposition,
    Degree2Log,
    Degree2Removal,
    contract_degree2,
    decompose,
    find_bridges,
    split_components,
    stitch,
)
from .tree import INFINITY, CutTree, query, tree_from_edges

__version__ = "0.1.0"

__all__ = [
    "BridgeDecomposition",
    "BuildConfig",
    "BuildStats",
    "CutTree",
    "Dendrogram",
    "DinitzEngine",
    "DisjointSets",
    "Degree2Log",
    "Degree2Removal",
    "FlowState",
    "GHNode",
    "GHState",
    "INFINITY",
    "Packing",
    "SinkLabels",
    "TreeEdge",
    "UndirectedGraph",
    "VertexMapping",
    "apply_packing",
    "bfs_from_sink",
    "connected_components",
    "connectivity_dendrogram",
    "connectivity_distribution",
    "construct",
    "contract_degree2",
    "decompose",
    "extract_subgraph",
    "find_bridges",
    "find_trivial_cuts",
    "goal_flow",
    "goal_oriented_sweep",
    "greedy_pack",
    "init",
    "max_flow_bidir",
    "max_flow_unidir",
    "min_cut_from_flow",
    "normalize",
    "query",
    "residual_reachable",
    "separate_adjacent_pairs",
    "separate_high_degree_pairs",
    "split_components",
    "stitch",
    "tree_from_edges",
]
