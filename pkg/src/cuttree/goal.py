"""Goal-oriented separation against one fixed high-degree sink.

Fixing the sink lets one breadth-first pass from it replace the per-pair
DAG construction: a search from any source can follow distance-decreasing
edges straight toward the sink, plus a bounded number of distance-level
"detour" edges.  The relaxed pass is a heuristic head start; standard
bidirectional phases always run afterwards to certify maximality, so the
result is exact for every detour budget, including zero.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .builder import GHState, GHNode
from .flow import DinitzEngine, FlowState
from .graph import UndirectedGraph

DEFAULT_GAMMA = 2


@dataclass
class SinkLabels:
    """Exact BFS distances toward ``sink`` (-1 where unreachable)."""

    sink: int
    dist: list[int]


def bfs_from_sink(g: UndirectedGraph, t: int) -> SinkLabels:
    dist = [-1] * g.id_bound()
    dist[t] = 0
    queue = deque([t])
    adj = g.adj
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = d
                queue.append(w)
    return SinkLabels(t, dist)


def goal_flow(
    g: UndirectedGraph, s: int, t: int, labels: SinkLabels, gamma: int = DEFAULT_GAMMA
) -> tuple[int, FlowState]:
    """Maximum s-t flow using sink labels with a ``gamma``-detour budget.

    The budget trades time for fewer label rebuilds; it never changes the
    returned value.
    """
    engine = DinitzEngine(g)
    value = engine.goal_max_flow(s, t, labels.dist, gamma)
    return value, engine.flow_state(s, t)


def goal_oriented_sweep(
    state: GHState,
    node: GHNode,
    gamma: int = DEFAULT_GAMMA,
    stats=None,
) -> None:
    """Separate every vertex of ``node`` from its highest-degree member.

    Sources are processed in descending label order (far vertices tend to
    have small, one-blocking-flow cuts).  Splits contract only the source
    side, so the sink side of the piece keeps its shape; labels are still
    refreshed once the splits since the last pass cover a quarter of the
    piece, because a contracted region can shorten paths near the boundary.
    Stale labels degrade only the head-start quality, never the cut values.
    """
    if len(node.members) <= 1:
        return
    g = state.g
    degcap = g.degcap
    sink = max(node.members, key=lambda v: (degcap[v], -v))
    engine = state.engine()

    while len(node.members) > 1:
        labels = bfs_from_sink(g, sink)
        dist = labels.dist
        piece_size = sum(1 for d in dist if d >= 0)
        budget = piece_size // 4
        removed = 0
        order = sorted(
            (v for v in node.members if v != sink), key=lambda v: (-dist[v], v)
        )
        for s in order:
            if state.node_of[s] is not node:
                continue
            if len(node.members) <= 1:
                break
            if stats is not None:
                stats.count_flow("goal")
                stats.goal_searches += 1
            value = engine.goal_max_flow(s, sink, dist, gamma)
            side = engine.source_side(s)
            state.apply_cut(node, s, sink, side, value)
            if state.last_markers is not None:
                # the split allocated marker vertices; give the sink-piece
                # marker a usable label hint and pad for fresh ids
                hint = min(
                    (dist[v] for v in side if 0 <= v < len(dist) and dist[v] >= 0),
                    default=-1,
                )
                if len(dist) < g.id_bound():
                    dist.extend([-1] * (g.id_bound() - len(dist)))
                dist[state.last_markers[1]] = hint
                removed += len(side)
                if removed > budget:
                    break
