"""Gomory-Hu construction: node splitting over a shared in-place arena.

The state owns one mutable graph that holds every tree node's contracted
graph as a separate connected piece.  Splitting a node converts that piece
into the two contracted graphs in place: boundary edges reroute to two
fresh vertices, so nothing is ever rebuilt from scratch.  Three shortcuts
keep the bookkeeping cheap:

* the old piece is reused for both sides rather than copied;
* a cut of size one performs no contraction at all, the split-off vertex
  itself becomes the marker for the new tree edge;
* only vertices inside the cut are traversed when reassigning markers, and
  the split node lives on as the sink-side node.

Every marker vertex maps to a tree edge incident to its owning node; that
map is what lets future splits reconnect tree edges without touching the
side that stays.  Splits move a *minimal* cut side (residual reachability
from one endpoint), normally whichever of the two is cheaper to carve out;
since every multi-vertex region is contracted to a marker, no later cut can
straddle an earlier one.
"""

from __future__ import annotations

import heapq
from typing import Callable, Iterable

from .flow import DinitzEngine, max_flow_unidir, residual_reachable
from .graph import UndirectedGraph
from .tree import CutTree, tree_from_edges

# flow callback: (graph, s, t) -> (cut value, minimal source side)
FlowFn = Callable[[UndirectedGraph, int, int], tuple[int, list[int]]]


class GHNode:
    """A tree node: the set of original vertices it still represents."""

    __slots__ = ("members", "idheap")

    def __init__(self, members: Iterable[int]):
        self.members = set(members)
        self.idheap = list(self.members)
        heapq.heapify(self.idheap)

    def __len__(self) -> int:
        return len(self.members)


class TreeEdge:
    __slots__ = ("a", "b", "weight")

    def __init__(self, a: GHNode, b: GHNode, weight: int):
        self.a = a
        self.b = b
        self.weight = weight

    def reconnect(self, old: GHNode, new: GHNode) -> None:
        if self.a is old:
            self.a = new
        else:
            self.b = new


class GHState:
    """In-progress cut tree over one connected graph.

    ``node_of[v]`` tracks the owning node of every original vertex; ``phi``
    maps contracted arena vertices to their incident tree edge.  The graph
    is mutated in place and must not be shared.
    """

    def __init__(self, g: UndirectedGraph):
        self.g = g
        self.n_orig = g.id_bound()
        root = GHNode(g.vertices())
        self.nodes: list[GHNode] = [root]
        self.node_of: list[GHNode | None] = [None] * self.n_orig
        for v in root.members:
            self.node_of[v] = root
        self.phi: dict[int, TreeEdge] = {}
        self.tree_edges: list[TreeEdge] = []
        self.separation_pairs: list[tuple[int, int]] = []
        # marker vertices allocated by the most recent split, or None when
        # the size-one shortcut fired: (marker inside the cut piece, marker
        # inside the sink piece)
        self.last_markers: tuple[int, int] | None = None
        self._in_cut = [0] * g.id_bound()
        self._cut_epoch = 0
        self._engine: DinitzEngine | None = None

    # -- flow plumbing -------------------------------------------------------

    def engine(self) -> DinitzEngine:
        if self._engine is None:
            self._engine = DinitzEngine(self.g)
        return self._engine

    def _default_flow(self, g: UndirectedGraph, s: int, t: int) -> tuple[int, list[int]]:
        engine = self.engine()
        value = engine.max_flow(s, t)
        return value, engine.min_side(s, t)

    # -- splitting -----------------------------------------------------------

    def separate(self, node: GHNode, s: int, t: int, flow: FlowFn | None = None) -> GHNode:
        """Split ``node`` by a minimum s-t cut computed on its current graph."""
        if s == t or s not in node.members or t not in node.members:
            raise ValueError(f"({s}, {t}) is not a pair of distinct members")
        if flow is None:
            flow = self._default_flow
        value, side = flow(self.g, s, t)
        return self.apply_cut(node, s, t, side, value)

    def separate_known_cut(
        self, node: GHNode, s: int, t: int, side: list[int], value: int
    ) -> GHNode:
        """Split ``node`` by an already-certified minimal minimum s-t cut."""
        if s == t or s not in node.members or t not in node.members:
            raise ValueError(f"({s}, {t}) is not a pair of distinct members")
        return self.apply_cut(node, s, t, side, value)

    def apply_cut(self, node: GHNode, s: int, t: int, side: list[int], value: int) -> GHNode:
        """Carve one side of a minimum s-t cut out of ``node``.

        ``side`` must contain exactly one of ``s`` and ``t`` and be one side
        of a minimum cut of the node's graph (the flow callbacks hand over
        whichever minimal side is cheaper to move).  The old node object
        stays behind for the other side, so tree edges of markers outside
        ``side`` need no update.  Returns the new node.
        """
        g = self.g
        node_of = self.node_of
        n_orig = self.n_orig
        phi = self.phi

        self._cut_epoch += 1
        ep = self._cut_epoch
        in_cut = self._in_cut
        if len(in_cut) < g.id_bound():
            in_cut.extend([0] * (g.id_bound() - len(in_cut)))
            self._in_cut = in_cut
        for v in side:
            in_cut[v] = ep
        if (in_cut[s] == ep) == (in_cut[t] == ep):
            raise ValueError("cut side must contain exactly one of the pair")

        new_node = GHNode(())
        new_members = new_node.members
        for v in side:
            if v < n_orig and node_of[v] is node:
                node.members.discard(v)
                new_members.add(v)
                node_of[v] = new_node
            else:
                edge = phi.get(v)
                if edge is not None:
                    edge.reconnect(node, new_node)
        new_node.idheap = list(new_members)
        heapq.heapify(new_node.idheap)
        self.nodes.append(new_node)

        edge = TreeEdge(new_node, node, value)
        self.tree_edges.append(edge)

        if len(side) == 1:
            # cut of size one: no contraction, the lone vertex is the marker
            phi[side[0]] = edge
            self.last_markers = None
        else:
            t_marker = g.add_vertex()  # stands for the sink side inside the cut piece
            s_marker = g.add_vertex()  # stands for the cut side inside the sink piece
            if len(in_cut) < g.id_bound():
                in_cut.extend([0] * (g.id_bound() - len(in_cut)))
            adj = g.adj
            cap = g.edge_cap
            for u in side:
                for w, eid in list(adj[u].items()):
                    if in_cut[w] != ep:
                        c = cap[eid]
                        g.remove_edge(eid)
                        g.add_edge(u, t_marker, c)
                        g.add_edge(s_marker, w, c)
            phi[t_marker] = edge
            phi[s_marker] = edge
            self.last_markers = (t_marker, s_marker)

        self.separation_pairs.append((s, t))
        return new_node

    # -- driving -------------------------------------------------------------

    def multi_nodes(self) -> list[GHNode]:
        return [n for n in self.nodes if len(n.members) > 1]

    def separate_all(
        self,
        pair_chooser: Callable[[GHNode], tuple[int, int]] | None = None,
        flow: FlowFn | None = None,
    ) -> None:
        """Split until every node is a singleton.

        The default chooser takes the two smallest member ids; any chooser
        yielding a valid pair produces a correct tree.
        """
        if pair_chooser is None:
            pair_chooser = lambda node: tuple(heapq.nsmallest(2, node.members))
        work = self.multi_nodes()
        idx = 0
        while idx < len(work):
            node = work[idx]
            idx += 1
            while len(node.members) > 1:
                s, t = pair_chooser(node)
                new_node = self.separate(node, s, t, flow)
                if len(new_node.members) > 1:
                    work.append(new_node)

    def finalize(self) -> CutTree:
        """Collapse the singleton-node tree into a vertex-level cut tree.

        Rooted at the smallest original vertex; dead id slots (possible in
        reduced per-piece graphs) keep sentinel entries.
        """
        vertex_of: dict[int, int] = {}
        for nd in self.nodes:
            if len(nd.members) != 1:
                raise ValueError("finalize before all nodes are singletons")
            (v,) = nd.members
            vertex_of[id(nd)] = v
        edges = [
            (vertex_of[id(e.a)], vertex_of[id(e.b)], e.weight) for e in self.tree_edges
        ]
        root = next(v for v in range(self.n_orig) if self.node_of[v] is not None)
        return tree_from_edges(self.n_orig, edges, root)


def init(g: UndirectedGraph) -> GHState:
    """Fresh construction state: a single node holding every vertex."""
    return GHState(g)


def unidirectional_flow(g: UndirectedGraph, s: int, t: int) -> tuple[int, list[int]]:
    """Flow callback backed by the reference unidirectional implementation."""
    value, fs = max_flow_unidir(g, s, t)
    return value, residual_reachable(g, fs.flow, s)
