"""End-to-end construction: reductions, heuristics, and pair selection.

``construct`` wires the stages together per the configured variant:

* A0  plain Gomory-Hu, unidirectional blocking flow
* A1  bidirectional blocking flow
* A2  + bridge/degree-2 reductions and high-degree pair selection
* A3  + adjacent pair selection
* A4  + greedy tree packing
* A5  + goal-oriented search (the full pipeline)

Variant choice changes speed and tree shape, never the query results.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field

from .builder import GHNode, GHState, unidirectional_flow
from .flow import DinitzEngine
from .goal import goal_oriented_sweep
from .graph import UndirectedGraph
from .packing import apply_packing
from .reduce import contract_degree2, decompose, split_components, stitch
from .tree import CutTree

VARIANT_FEATURES: dict[str, frozenset[str]] = {
    "A0": frozenset(),
    "A1": frozenset({"bidirectional"}),
    "A2": frozenset({"bidirectional", "reductions", "high_degree"}),
    "A3": frozenset({"bidirectional", "reductions", "high_degree", "adjacent"}),
    "A4": frozenset({"bidirectional", "reductions", "high_degree", "adjacent", "packing"}),
    "A5": frozenset(
        {"bidirectional", "reductions", "high_degree", "adjacent", "packing", "goal"}
    ),
}

DEFAULT_ALPHA = 1
DEFAULT_BETA = None  # no breadth limit
DEFAULT_GAMMA = 2
DEFAULT_K = 10


@dataclass
class BuildStats:
    """Instrumentation counters collected during one construction."""

    flow_calls: int = 0
    bidir_phases: int = 0
    bfs_edge_touches: int = 0
    packing_cuts: int = 0
    goal_searches: int = 0
    stage_flow_calls: dict[str, int] = field(default_factory=dict)
    stage_seconds: dict[str, float] = field(default_factory=dict)
    stage: str = "separate-all"

    def count_flow(self, stage: str | None = None) -> None:
        self.flow_calls += 1
        key = stage if stage is not None else self.stage
        self.stage_flow_calls[key] = self.stage_flow_calls.get(key, 0) + 1

    def add_seconds(self, stage: str, seconds: float) -> None:
        self.stage_seconds[stage] = self.stage_seconds.get(stage, 0.0) + seconds

    def summary_lines(self) -> list[str]:
        lines = [
            f"flow_calls {self.flow_calls}",
            f"bidir_phases {self.bidir_phases}",
            f"bfs_edge_touches {self.bfs_edge_touches}",
            f"packing_cuts {self.packing_cuts}",
            f"goal_searches {self.goal_searches}",
        ]
        for stage, calls in sorted(self.stage_flow_calls.items()):
            lines.append(f"stage_flow_calls.{stage} {calls}")
        return lines


@dataclass
class BuildConfig:
    """Construction parameters; None fields fall back to the variant preset.

    ``beta=None`` means no breadth limit.  The explicit feature toggles
    exist for ablation experiments (e.g. the same variant with reductions
    forced off); leave them None for the standard ladder.
    """

    variant: str = "A5"
    alpha: int = DEFAULT_ALPHA
    beta: int | None = DEFAULT_BETA
    gamma: int = DEFAULT_GAMMA
    k: int = DEFAULT_K
    flow_engine: str | None = None  # "unidirectional" | "bidirectional"
    use_reductions: bool | None = None
    use_high_degree: bool | None = None
    use_adjacent: bool | None = None
    use_packing: bool | None = None
    use_goal: bool | None = None

    def feature(self, name: str) -> bool:
        override = getattr(self, f"use_{name}", None)
        if override is not None:
            return override
        return name in VARIANT_FEATURES[self.variant]

    @property
    def bidirectional(self) -> bool:
        if self.flow_engine is not None:
            return self.flow_engine == "bidirectional"
        return "bidirectional" in VARIANT_FEATURES[self.variant]


def construct(
    g: UndirectedGraph, config: BuildConfig | None = None, stats: BuildStats | None = None
) -> CutTree:
    """Build the cut tree of a normalized graph (disconnected inputs allowed)."""
    if config is None:
        config = BuildConfig()
    if config.variant not in VARIANT_FEATURES:
        raise ValueError(f"unknown variant {config.variant!r}")
    if stats is None:
        stats = BuildStats()
    n = g.id_bound()
    if n == 0:
        return CutTree(0, [], [], [])

    reductions = config.feature("reductions")
    started = time.perf_counter()
    decomp = decompose(g) if reductions else split_components(g)
    trees = []
    logs = []
    for piece, _pmap in decomp.components:
        logs.append(contract_degree2(piece) if reductions else [])
    stats.add_seconds("reduce", time.perf_counter() - started)
    for piece, _pmap in decomp.components:
        trees.append(_construct_piece(piece, config, stats))
    started = time.perf_counter()
    result = stitch(trees, decomp, logs)
    stats.add_seconds("stitch", time.perf_counter() - started)
    return result


def _construct_piece(piece: UndirectedGraph, config: BuildConfig, stats: BuildStats) -> CutTree:
    state = GHState(piece)
    engine = state.engine()
    engine.stats = stats

    if config.bidirectional:
        def flow(gr, s, t):
            stats.count_flow()
            value = engine.max_flow(s, t)
            return value, engine.min_side(s, t)
    else:
        def flow(gr, s, t):
            stats.count_flow()
            return unidirectional_flow(gr, s, t)

    if config.feature("packing"):
        stats.stage = "packing"
        started = time.perf_counter()
        apply_packing(state, config.alpha, config.beta, stats)
        stats.add_seconds("packing", time.perf_counter() - started)
    if config.feature("goal"):
        stats.stage = "goal"
        started = time.perf_counter()
        goal_oriented_sweep(state, state.nodes[0], config.gamma, stats)
        stats.add_seconds("goal", time.perf_counter() - started)
    if config.feature("high_degree"):
        stats.stage = "high-degree"
        started = time.perf_counter()
        separate_high_degree_pairs(state, config.k, flow)
        stats.add_seconds("high-degree", time.perf_counter() - started)
    if config.feature("adjacent"):
        stats.stage = "adjacent"
        started = time.perf_counter()
        separate_adjacent_pairs(state, flow)
        stats.add_seconds("adjacent", time.perf_counter() - started)
    stats.stage = "separate-all"
    started = time.perf_counter()
    state.separate_all(flow=flow)
    stats.add_seconds("separate-all", time.perf_counter() - started)
    return state.finalize()


def separate_high_degree_pairs(state: GHState, k: int, flow=None) -> None:
    """Split nodes while any holds two of the top-k degree vertices.

    The candidate set is ranked once at stage entry by degree in each
    member's current node graph, ties to the smaller id.
    """
    if k <= 0:
        return
    degcap = state.g.degcap
    members = [v for node in state.multi_nodes() for v in node.members]
    ranked = sorted(members, key=lambda v: (-degcap[v], v))[:k]
    work = state.multi_nodes()
    idx = 0
    while idx < len(work):
        node = work[idx]
        idx += 1
        while True:
            in_node = [v for v in ranked if state.node_of[v] is node]
            if len(in_node) < 2:
                break
            new_node = state.separate(node, in_node[0], in_node[1], flow)
            if len(new_node.members) > 1:
                work.append(new_node)


def separate_adjacent_pairs(state: GHState, flow=None) -> None:
    """Split every node to singletons, preferring pairs adjacent in its graph.

    The pair is the first found scanning member ids in ascending order and
    each member's adjacency in insertion order.  A node with no adjacent
    in-node pair (possible once markers separate the remaining members)
    falls back to its two smallest member ids.
    """
    work = state.multi_nodes()
    idx = 0
    while idx < len(work):
        node = work[idx]
        idx += 1
        while len(node.members) > 1:
            s, t = _adjacent_or_smallest(state, node)
            new_node = state.separate(node, s, t, flow)
            if len(new_node.members) > 1:
                work.append(new_node)


def _adjacent_or_smallest(state: GHState, node: GHNode) -> tuple[int, int]:
    node_of = state.node_of
    n_orig = state.n_orig
    adj = state.g.adj
    heap = node.idheap
    deferred = []
    found = None
    while heap:
        u = heap[0]
        if node_of[u] is not node:
            heapq.heappop(heap)
            continue
        for w in adj[u]:
            if w < n_orig and node_of[w] is node:
                found = (u, w)
                break
        if found is not None:
            break
        # member with no in-node neighbor: set aside, try the next id
        deferred.append(heapq.heappop(heap))
    for u in deferred:
        heapq.heappush(heap, u)
    if found is not None:
        return found
    a, b = heapq.nsmallest(2, node.members)
    return a, b
