"""Minimum s-t cuts via Dinitz's blocking-flow algorithm.

Two implementations live here on purpose.  :func:`max_flow_unidir` is a
self-contained reference version with plain breadth-first level graphs; it
doubles as the oracle that everything else in the package is checked
against.  :class:`DinitzEngine` is the production engine: it builds the
shortest-path DAG with a bidirectional search that expands whichever
frontier has fewer incident edges, keeps the DAG implicit (only distances
are stored), and reuses epoch-stamped scratch arrays so that thousands of
cut queries on one graph avoid reallocation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import UndirectedGraph

UNLABELED = -1


@dataclass
class FlowState:
    """A feasible s-t flow over a graph's edge slots.

    ``flow[e]`` is the signed net flow on edge ``e`` in its canonical
    orientation (positive means from ``edge_u[e]`` toward ``edge_v[e]``).
    """

    flow: list[int]
    source: int
    sink: int
    value: int

    def residual(self, g: UndirectedGraph, eid: int, from_vertex: int) -> int:
        """Residual capacity of ``eid`` leaving ``from_vertex``."""
        if g.edge_u[eid] == from_vertex:
            return g.edge_cap[eid] - self.flow[eid]
        return g.edge_cap[eid] + self.flow[eid]


def residual_reachable(g: UndirectedGraph, flow: list[int], s: int) -> list[int]:
    """Vertices reachable from ``s`` in the residual graph, in BFS order."""
    cap, eu = g.edge_cap, g.edge_u
    seen = {s}
    order = [s]
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w, eid in g.adj[u].items():
            if w in seen:
                continue
            res = cap[eid] - flow[eid] if eu[eid] == u else cap[eid] + flow[eid]
            if res > 0:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def min_cut_from_flow(g: UndirectedGraph, fs: FlowState, s: int) -> list[int]:
    """Extract the minimal minimum s-t cut from a maximum flow.

    The source side is the set of vertices residual-reachable from ``s``;
    it is minimal among all minimum s-t cuts under set inclusion.  Raises
    ``ValueError`` if the flow is not maximum (the sink is still reachable).
    """
    side = residual_reachable(g, fs.flow, s)
    if fs.sink in side:
        raise ValueError("flow is not maximum: sink is residual-reachable")
    return side


def max_flow_unidir(g: UndirectedGraph, s: int, t: int) -> tuple[int, FlowState]:
    """Reference Dinitz: full BFS level graph per phase, cursor-based DFS.

    Kept independent of :class:`DinitzEngine` so it can serve as an oracle.
    Vertices in different components give value 0 with an empty flow.
    """
    if s == t:
        raise ValueError("source and sink must differ")
    if not (g.vertex_alive[s] and g.vertex_alive[t]):
        raise ValueError("source and sink must be live vertices")
    nb = g.id_bound()
    adj, cap, eu = g.adj, g.edge_cap, g.edge_u
    flow = [0] * len(cap)
    value = 0
    while True:
        level = [UNLABELED] * nb
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = level[u]
            for w, eid in adj[u].items():
                if level[w] == UNLABELED:
                    res = cap[eid] - flow[eid] if eu[eid] == u else cap[eid] + flow[eid]
                    if res > 0:
                        level[w] = du + 1
                        queue.append(w)
        if level[t] == UNLABELED:
            break
        # blocking flow on the level graph
        snap: list[list[tuple[int, int]] | None] = [None] * nb
        cur = [0] * nb
        stack = [s]
        path: list[tuple[int, int]] = []  # (eid, sign) along the stack
        while stack:
            u = stack[-1]
            if u == t:
                delta = None
                for eid, sign in path:
                    res = cap[eid] - flow[eid] if sign > 0 else cap[eid] + flow[eid]
                    if delta is None or res < delta:
                        delta = res
                for eid, sign in path:
                    flow[eid] += sign * delta
                value += delta
                for i, (eid, sign) in enumerate(path):
                    res = cap[eid] - flow[eid] if sign > 0 else cap[eid] + flow[eid]
                    if res == 0:
                        del stack[i + 1 :]
                        del path[i:]
                        break
                continue
            su = snap[u]
            if su is None:
                su = snap[u] = list(adj[u].items())
            i = cur[u]
            want = level[u] + 1
            advanced = False
            while i < len(su):
                w, eid = su[i]
                if level[w] == want:
                    res = cap[eid] - flow[eid] if eu[eid] == u else cap[eid] + flow[eid]
                    if res > 0:
                        cur[u] = i
                        stack.append(w)
                        path.append((eid, 1 if eu[eid] == u else -1))
                        advanced = True
                        break
                i += 1
            if not advanced:
                cur[u] = i
                level[u] = -2  # dead for the rest of the phase
                stack.pop()
                if path:
                    path.pop()
    return value, FlowState(flow, s, t, value)


class DinitzEngine:
    """Reusable bidirectional blocking-flow engine over one graph.

    Distance labels, cursors, and the flow array are epoch-stamped and sized
    to the graph's id space, reset lazily per query; the arrays grow on
    demand when the graph does (the cut-tree builder contracts in place and
    allocates fresh vertices mid-run).
    """

    def __init__(self, g: UndirectedGraph, stats=None):
        self.g = g
        self.stats = stats
        nb = g.id_bound()
        ne = len(g.edge_cap)
        self.flow = [0] * ne
        self.touched: list[int] = []
        self.dist_s = [0] * nb
        self.dist_t = [0] * nb
        self.mark_s = [0] * nb
        self.mark_t = [0] * nb
        self.dead = [0] * nb
        self.cur = [0] * nb
        self.snap: list[list[tuple[int, int]] | None] = [None] * nb
        self.snap_mark = [0] * nb
        self.epoch = 0
        self.value = 0

    def _grow(self) -> None:
        nb = self.g.id_bound()
        short = nb - len(self.dist_s)
        if short > 0:
            for arr in (self.dist_s, self.dist_t, self.mark_s, self.mark_t,
                        self.dead, self.cur, self.snap_mark):
                arr.extend([0] * short)
            self.snap.extend([None] * short)
        ne = len(self.g.edge_cap)
        if ne > len(self.flow):
            self.flow.extend([0] * (ne - len(self.flow)))

    def _reset(self) -> None:
        flow = self.flow
        for eid in self.touched:
            flow[eid] = 0
        self.touched.clear()
        self.value = 0
        self._grow()

    def max_flow(self, s: int, t: int) -> int:
        """Maximum s-t flow value; the flow is kept for cut extraction."""
        if s == t:
            raise ValueError("source and sink must differ")
        self._reset()
        while self._bidir_phase(s, t):
            pass
        return self.value

    def source_side(self, s: int) -> list[int]:
        """Minimal min-cut side of the last query: residual-reachable from s."""
        return residual_reachable(self.g, self.flow, s)

    def min_side(self, s: int, t: int) -> list[int]:
        """The smaller-volume side of a minimum cut from the last query.

        Walks the residual graph forward from ``s`` and backward from ``t``
        in lockstep and returns whichever closure completes first: the
        minimal source side, or the minimal sink side (whose complement is
        the maximal minimum cut).  Both are minimum s-t cuts; the caller
        only pays for the small side.  Ties prefer the source side.
        """
        g = self.g
        adj, cap, eu = g.adj, g.edge_cap, g.edge_u
        flow = self.flow
        seen_s = {s}
        seen_t = {t}
        order_s = [s]
        order_t = [t]
        qs = deque([s])
        qt = deque([t])
        while True:
            if qs:
                u = qs.popleft()
                for w, eid in adj[u].items():
                    if w not in seen_s:
                        res = cap[eid] - flow[eid] if eu[eid] == u else cap[eid] + flow[eid]
                        if res > 0:
                            seen_s.add(w)
                            order_s.append(w)
                            qs.append(w)
            else:
                return order_s
            if qt:
                w = qt.popleft()
                for u, eid in adj[w].items():
                    if u not in seen_t:
                        # traverse edges that carry residual capacity into w
                        res = cap[eid] - flow[eid] if eu[eid] == u else cap[eid] + flow[eid]
                        if res > 0:
                            seen_t.add(u)
                            order_t.append(u)
                            qt.append(u)
            else:
                return order_t

    def flow_state(self, s: int, t: int) -> FlowState:
        return FlowState(list(self.flow), s, t, self.value)

    # -- one Dinitz phase ----------------------------------------------------

    def _bidir_phase(self, s: int, t: int) -> bool:
        """Grow both frontiers until they meet, then push a blocking flow.

        Returns False when the sink is unreachable (the flow is maximum).
        Frontier choice follows total incident capacity, ties to the source
        side.  Only the distances are kept; the shortest-path DAG is implied.
        """
        g = self.g
        adj, cap, eu, degcap = g.adj, g.edge_cap, g.edge_u, g.degcap
        flow = self.flow
        dist_s, dist_t = self.dist_s, self.dist_t
        mark_s, mark_t = self.mark_s, self.mark_t
        self.epoch += 1
        ep = self.epoch
        stats = self.stats
        if stats is not None:
            stats.bidir_phases += 1
        touches = 0

        mark_s[s] = ep
        dist_s[s] = 0
        mark_t[t] = ep
        dist_t[t] = 0
        front_s, front_t = [s], [t]
        sum_s, sum_t = degcap[s], degcap[t]
        ds = dt = 0
        met = False
        while True:
            if sum_s <= sum_t:
                nxt = []
                d = ds + 1
                for u in front_s:
                    for w, eid in adj[u].items():
                        touches += 1
                        if mark_s[w] != ep:
                            res = cap[eid] - flow[eid] if eu[eid] == u else cap[eid] + flow[eid]
                            if res > 0:
                                mark_s[w] = ep
                                dist_s[w] = d
                                nxt.append(w)
                                if mark_t[w] == ep:
                                    met = True
                ds = d
                front_s = nxt
                sum_s = 0
                for w in nxt:
                    sum_s += degcap[w]
            else:
                nxt = []
                d = dt + 1
                for u in front_t:
                    for w, eid in adj[u].items():
                        touches += 1
                        if mark_t[w] != ep:
                            # edge must carry residual capacity toward the sink side
                            res = cap[eid] - flow[eid] if eu[eid] == w else cap[eid] + flow[eid]
                            if res > 0:
                                mark_t[w] = ep
                                dist_t[w] = d
                                nxt.append(w)
                                if mark_s[w] == ep:
                                    met = True
                dt = d
                front_t = nxt
                sum_t = 0
                for w in nxt:
                    sum_t += degcap[w]
            if met:
                break
            if not nxt:
                if stats is not None:
                    stats.bfs_edge_touches += touches
                return False
        if stats is not None:
            stats.bfs_edge_touches += touches
        self._blocking_flow(s, t, ep, ds + dt)
        return True

    def _blocking_flow(self, s: int, t: int, ep: int, total: int) -> None:
        """Cursor DFS over the implicit DAG.

        A vertex's layer is its source distance when the forward search
        labeled it, else ``total`` minus its sink distance; augmenting paths
        only ever step one layer forward, which admits exactly the edges
        within some shortest path.
        """
        g = self.g
        adj, cap, eu = g.adj, g.edge_cap, g.edge_u
        flow = self.flow
        touched = self.touched
        dist_s, dist_t = self.dist_s, self.dist_t
        mark_s, mark_t = self.mark_s, self.mark_t
        dead, cur, snap, snap_mark = self.dead, self.cur, self.snap, self.snap_mark

        stack = [s]
        path: list[tuple[int, int]] = []
        while stack:
            u = stack[-1]
            if u == t:
                delta = None
                for eid, sign in path:
                    res = cap[eid] - flow[eid] if sign > 0 else cap[eid] + flow[eid]
                    if delta is None or res < delta:
                        delta = res
                for eid, sign in path:
                    flow[eid] += sign * delta
                    touched.append(eid)
                self.value += delta
                for i, (eid, sign) in enumerate(path):
                    res = cap[eid] - flow[eid] if sign > 0 else cap[eid] + flow[eid]
                    if res == 0:
                        del stack[i + 1 :]
                        del path[i:]
                        break
                continue
            if snap_mark[u] != ep:
                snap[u] = list(adj[u].items())
                snap_mark[u] = ep
                cur[u] = 0
            su = snap[u]
            i = cur[u]
            nu = len(su)
            want = (dist_s[u] if mark_s[u] == ep else total - dist_t[u]) + 1
            advanced = False
            while i < nu:
                w, eid = su[i]
                if dead[w] != ep:
                    if mark_s[w] == ep:
                        lw = dist_s[w]
                    elif mark_t[w] == ep:
                        lw = total - dist_t[w]
                    else:
                        lw = UNLABELED
                    if lw == want:
                        res = cap[eid] - flow[eid] if eu[eid] == u else cap[eid] + flow[eid]
                        if res > 0:
                            cur[u] = i
                            stack.append(w)
                            path.append((eid, 1 if eu[eid] == u else -1))
                            advanced = True
                            break
                i += 1
            if not advanced:
                cur[u] = i
                dead[u] = ep
                stack.pop()
                if path:
                    path.pop()

    # -- goal-oriented entry point --------------------------------------------

    def goal_max_flow(self, s: int, t: int, dist_to_sink: list[int], gamma: int) -> int:
        """Maximum flow seeded by one relaxed pass along precomputed labels.

        The first pass augments along label-admissible edges with at most
        ``gamma`` detour edges per path; standard bidirectional phases then
        finish and certify maximality, so stale labels cost time, never
        correctness.
        """
        if s == t:
            raise ValueError("source and sink must differ")
        self._reset()
        if 0 <= s < len(dist_to_sink) and dist_to_sink[s] >= 0:
            self._relaxed_pass(s, t, dist_to_sink, gamma)
        while self._bidir_phase(s, t):
            pass
        return self.value

    def _relaxed_pass(self, s: int, t: int, dist: list[int], gamma: int) -> None:
        """One blocking pass over the layered product of (vertex, detours used).

        Admissible steps go label-downhill for free or label-level at the
        cost of one detour; the pair (label, detours) is strictly monotone
        along any path, so the search space is acyclic even with stale labels.
        """
        g = self.g
        adj, cap, eu = g.adj, g.edge_cap, g.edge_u
        flow = self.flow
        touched = self.touched
        nd = len(dist)

        snap: dict[int, list[tuple[int, int]]] = {}
        cur: dict[tuple[int, int], int] = {}
        exhausted: set[tuple[int, int]] = set()
        stack: list[tuple[int, int]] = [(s, 0)]
        path: list[tuple[int, int]] = []
        while stack:
            u, k = stack[-1]
            if u == t:
                delta = None
                for eid, sign in path:
                    res = cap[eid] - flow[eid] if sign > 0 else cap[eid] + flow[eid]
                    if delta is None or res < delta:
                        delta = res
                for eid, sign in path:
                    flow[eid] += sign * delta
                    touched.append(eid)
                self.value += delta
                for i, (eid, sign) in enumerate(path):
                    res = cap[eid] - flow[eid] if sign > 0 else cap[eid] + flow[eid]
                    if res == 0:
                        del stack[i + 1 :]
                        del path[i:]
                        break
                continue
            su = snap.get(u)
            if su is None:
                su = snap[u] = list(adj[u].items())
            key = (u, k)
            i = cur.get(key, 0)
            nu = len(su)
            du = dist[u]
            advanced = False
            while i < nu:
                w, eid = su[i]
                dw = dist[w] if w < nd else UNLABELED
                if dw >= 0:
                    if du == dw + 1:
                        nk = k
                    elif du == dw and k < gamma:
                        nk = k + 1
                    else:
                        nk = -1
                    if nk >= 0 and (w, nk) not in exhausted:
                        res = cap[eid] - flow[eid] if eu[eid] == u else cap[eid] + flow[eid]
                        if res > 0:
                            cur[key] = i
                            stack.append((w, nk))
                            path.append((eid, 1 if eu[eid] == u else -1))
                            advanced = True
                            break
                i += 1
            if not advanced:
                cur[key] = i
                exhausted.add(key)
                stack.pop()
                if path:
                    path.pop()


def max_flow_bidir(g: UndirectedGraph, s: int, t: int) -> tuple[int, FlowState]:
    """Maximum s-t flow with bidirectional DAG construction."""
    if not (g.vertex_alive[s] and g.vertex_alive[t]):
        raise ValueError("source and sink must be live vertices")
    engine = DinitzEngine(g)
    value = engine.max_flow(s, t)
    return value, engine.flow_state(s, t)
