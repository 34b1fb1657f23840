"""Normalized undirected capacitated graphs with in-place contraction.

Parallel edges are merged into single capacitated edges and self-loops are
dropped.  All inputs carry unit capacities, so capacities greater than one
only ever arise from merging, and every operation preserves integrality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass
class VertexMapping:
    """Mutually inverse maps between external vertex labels and dense ids."""

    to_internal: dict[int, int] = field(default_factory=dict)
    to_external: list[int] = field(default_factory=list)

    def intern(self, label: int) -> int:
        """Return the dense id for ``label``, assigning the next id on first sight."""
        v = self.to_internal.get(label)
        if v is None:
            v = len(self.to_external)
            self.to_internal[label] = v
            self.to_external.append(label)
        return v

    def internal(self, label: int) -> int:
        return self.to_internal[label]

    def external(self, v: int) -> int:
        return self.to_external[v]

    def __len__(self) -> int:
        return len(self.to_external)

    @classmethod
    def identity(cls, n: int) -> VertexMapping:
        return cls({i: i for i in range(n)}, list(range(n)))


class UndirectedGraph:
    """Undirected capacitated graph with merged parallel edges.

    Vertices are dense integer ids.  Contraction and edge removal leave dead
    id slots behind, so iterate :meth:`vertices` rather than ``range(...)``.
    Edge ids are stable and never reused; a removed edge keeps its slot in
    the endpoint/capacity arrays but drops out of the adjacency maps.
    """

    __slots__ = (
        "adj",
        "edge_u",
        "edge_v",
        "edge_cap",
        "edge_alive",
        "vertex_alive",
        "degcap",
        "live_vertex_count",
        "live_edge_count",
    )

    def __init__(self, n: int = 0):
        self.adj: list[dict[int, int]] = [{} for _ in range(n)]
        self.edge_u: list[int] = []
        self.edge_v: list[int] = []
        self.edge_cap: list[int] = []
        self.edge_alive: list[bool] = []
        self.vertex_alive: list[bool] = [True] * n
        self.degcap: list[int] = [0] * n
        self.live_vertex_count = n
        self.live_edge_count = 0

    # -- size and iteration ------------------------------------------------

    @property
    def n(self) -> int:
        """Number of live vertices."""
        return self.live_vertex_count

    @property
    def m(self) -> int:
        """Number of live (merged) edges."""
        return self.live_edge_count

    def id_bound(self) -> int:
        """One past the largest vertex id ever allocated."""
        return len(self.adj)

    def vertices(self) -> Iterator[int]:
        alive = self.vertex_alive
        return (v for v in range(len(alive)) if alive[v])

    def edge_ids(self) -> Iterator[int]:
        alive = self.edge_alive
        return (e for e in range(len(alive)) if alive[e])

    def edge_list(self) -> list[tuple[int, int, int]]:
        """Live edges as (u, v, capacity) in creation order."""
        return [
            (self.edge_u[e], self.edge_v[e], self.edge_cap[e])
            for e in range(len(self.edge_alive))
            if self.edge_alive[e]
        ]

    def degree(self, v: int) -> int:
        """Capacity-weighted degree: the capacity of the trivial cut {v}."""
        return self.degcap[v]

    def total_capacity(self) -> int:
        return sum(self.edge_cap[e] for e in self.edge_ids())

    # -- mutation ----------------------------------------------------------

    def add_vertex(self) -> int:
        v = len(self.adj)
        self.adj.append({})
        self.vertex_alive.append(True)
        self.degcap.append(0)
        self.live_vertex_count += 1
        return v

    def _materialize(self, v: int) -> None:
        """Make ``v`` a live vertex: either the next fresh id or a dead slot."""
        if v == len(self.adj):
            self.add_vertex()
            return
        if v < len(self.adj) and not self.vertex_alive[v]:
            self.vertex_alive[v] = True
            self.live_vertex_count += 1
            return
        raise ValueError(f"vertex id {v} is not fresh")

    def add_edge(self, u: int, v: int, cap: int = 1) -> int:
        """Insert an edge, merging into an existing parallel edge if present."""
        if u == v:
            raise ValueError("self-loops are not representable")
        eid = self.adj[u].get(v)
        if eid is not None:
            self.edge_cap[eid] += cap
        else:
            eid = len(self.edge_u)
            self.edge_u.append(u)
            self.edge_v.append(v)
            self.edge_cap.append(cap)
            self.edge_alive.append(True)
            self.adj[u][v] = eid
            self.adj[v][u] = eid
            self.live_edge_count += 1
        self.degcap[u] += cap
        self.degcap[v] += cap
        return eid

    def remove_edge(self, eid: int) -> None:
        u, v = self.edge_u[eid], self.edge_v[eid]
        cap = self.edge_cap[eid]
        del self.adj[u][v]
        del self.adj[v][u]
        self.degcap[u] -= cap
        self.degcap[v] -= cap
        self.edge_alive[eid] = False
        self.live_edge_count -= 1

    def kill_vertex(self, v: int) -> None:
        """Retire a vertex that has no incident edges left."""
        if self.adj[v]:
            raise ValueError("cannot kill a vertex with incident edges")
        self.vertex_alive[v] = False
        self.live_vertex_count -= 1

    def edge_id(self, u: int, v: int) -> int | None:
        return self.adj[u].get(v)

    def copy(self) -> UndirectedGraph:
        g = UndirectedGraph.__new__(UndirectedGraph)
        g.adj = [dict(d) for d in self.adj]
        g.edge_u = list(self.edge_u)
        g.edge_v = list(self.edge_v)
        g.edge_cap = list(self.edge_cap)
        g.edge_alive = list(self.edge_alive)
        g.vertex_alive = list(self.vertex_alive)
        g.degcap = list(self.degcap)
        g.live_vertex_count = self.live_vertex_count
        g.live_edge_count = self.live_edge_count
        return g

    def contract(self, group: Iterable[int], s: int) -> UndirectedGraph:
        """Contract the vertex set ``group`` into the fresh vertex ``s``, in place.

        Edges between the group and the rest reconnect to ``s`` with parallel
        edges merged; edges inside the group disappear.  ``s`` must be either
        the next unallocated id or a previously retired slot.
        """
        members = set(group)
        if not members:
            raise ValueError("cannot contract an empty vertex set")
        boundary: list[tuple[int, int]] = []
        for u in members:
            if not self.vertex_alive[u]:
                raise ValueError(f"vertex {u} is not alive")
            for w, eid in list(self.adj[u].items()):
                cap = self.edge_cap[eid]
                self.remove_edge(eid)
                if w not in members:
                    boundary.append((w, cap))
        for u in members:
            self.kill_vertex(u)
        self._materialize(s)
        for w, cap in boundary:
            self.add_edge(s, w, cap)
        return self


def normalize(raw_edges: Iterable[tuple[int, int]]) -> tuple[UndirectedGraph, VertexMapping]:
    """Build a normalized graph from raw (label, label) pairs.

    Self-loops are dropped, duplicate pairs merge into one edge with summed
    capacity, and labels are densified in order of first appearance.  An
    empty input yields the empty graph.
    """
    g = UndirectedGraph()
    mapping = VertexMapping()
    for a, b in raw_edges:
        if a == b:
            continue
        u = mapping.intern(a)
        if u == g.id_bound():
            g.add_vertex()
        v = mapping.intern(b)
        if v == g.id_bound():
            g.add_vertex()
        g.add_edge(u, v, 1)
    return g, mapping


def connected_components(g: UndirectedGraph) -> list[list[int]]:
    """Partition the live vertices into components, ordered by smallest id."""
    seen = [False] * g.id_bound()
    components: list[list[int]] = []
    adj = g.adj
    for start in g.vertices():
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        components.append(comp)
    return components


def extract_subgraph(g: UndirectedGraph, vertices: list[int]) -> tuple[UndirectedGraph, list[int]]:
    """Copy the subgraph induced by ``vertices`` onto dense local ids.

    Returns the new graph and the local-to-parent id map (the input list).
    """
    local = {v: i for i, v in enumerate(vertices)}
    sub = UndirectedGraph(len(vertices))
    for v in vertices:
        lv = local[v]
        for w, eid in g.adj[v].items():
            lw = local.get(w)
            if lw is not None and lv < lw:
                sub.add_edge(lv, lw, g.edge_cap[eid])
    return sub, list(vertices)
