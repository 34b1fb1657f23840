"""Input-shrinking rules applied before tree construction.

Bridges are cuts of size one, so removing them and solving each
bridgeless piece separately loses nothing; every bridge reappears in the
final tree as a weight-1 edge.  Inside a bridgeless piece a vertex of
degree two has connectivity exactly two with everything else, so it can be
spliced out and later reattached as a weight-2 leaf.  ``stitch`` reverses
both rules and also links the connected components of the input with
weight-0 edges so a single tree answers every query.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import UndirectedGraph, connected_components, extract_subgraph
from .tree import CutTree, tree_from_edges


@dataclass
class Degree2Removal:
    """One splice: ``vertex`` detached, hanging off ``attach`` with weight 2.

    ``new_edge`` is the replacement edge's endpoints, or None when both
    incident edges led to the same neighbor (a would-be self-loop).
    """

    vertex: int
    attach: int
    new_edge: tuple[int, int] | None


Degree2Log = list[Degree2Removal]


@dataclass
class BridgeDecomposition:
    """Edge partition of a graph into bridgeless pieces and bridges.

    ``components`` pairs each extracted piece with its local-to-original
    vertex map.  ``isolated`` holds vertices left with no edges (original
    degree-0 vertices and vertices all of whose edges were bridges).
    """

    n_original: int
    components: list[tuple[UndirectedGraph, list[int]]] = field(default_factory=list)
    bridges: list[tuple[int, int]] = field(default_factory=list)
    isolated: list[int] = field(default_factory=list)


def find_bridges(g: UndirectedGraph) -> list[tuple[int, int]]:
    """All bridges of ``g`` by one low-link traversal, iteratively.

    An edge of capacity two or more is a merged parallel pair and never a
    bridge.
    """
    nb = g.id_bound()
    pre = [-1] * nb
    low = [0] * nb
    adj, cap = g.adj, g.edge_cap
    bridges: list[tuple[int, int]] = []
    counter = 0
    for root in g.vertices():
        if pre[root] >= 0:
            continue
        # stack entries: (vertex, parent edge id, adjacency snapshot, cursor)
        stack = [(root, -1, list(adj[root].items()), 0)]
        pre[root] = low[root] = counter
        counter += 1
        while stack:
            v, peid, items, i = stack[-1]
            if i < len(items):
                stack[-1] = (v, peid, items, i + 1)
                w, eid = items[i]
                if eid == peid:
                    if cap[eid] > 1:
                        if pre[w] < low[v]:
                            low[v] = pre[w]
                    continue
                if pre[w] >= 0:
                    if pre[w] < low[v]:
                        low[v] = pre[w]
                else:
                    pre[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, list(adj[w].items()), 0))
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] == pre[v]:
                        bridges.append((u, v))
    return bridges


def decompose(g: UndirectedGraph) -> BridgeDecomposition:
    """Split ``g`` into 2-edge-connected pieces plus its bridges."""
    bridge_pairs = find_bridges(g)
    bridge_eids = {g.edge_id(u, v) for u, v in bridge_pairs}
    decomp = BridgeDecomposition(n_original=g.id_bound(), bridges=bridge_pairs)

    # components of the graph minus bridges
    seen = [False] * g.id_bound()
    adj = g.adj
    for start in g.vertices():
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for w, eid in adj[u].items():
                if not seen[w] and eid not in bridge_eids:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        if len(comp) == 1:
            decomp.isolated.append(start)
        else:
            comp.sort()
            decomp.components.append(extract_subgraph(g, comp))
    return decomp


def split_components(g: UndirectedGraph) -> BridgeDecomposition:
    """Reduction-free decomposition: one piece per connected component."""
    decomp = BridgeDecomposition(n_original=g.id_bound())
    for comp in connected_components(g):
        if len(comp) == 1:
            decomp.isolated.append(comp[0])
        else:
            decomp.components.append(extract_subgraph(g, comp))
    return decomp


def contract_degree2(g: UndirectedGraph) -> Degree2Log:
    """Splice out degree-2 vertices in place until none remain (or n <= 2).

    Requires a bridgeless graph, where any degree-2 vertex has connectivity
    exactly two with every other vertex.  The replacement edge takes the
    smaller of the two removed capacities and merges with an existing
    parallel edge.
    """
    log: Degree2Log = []
    queue = [v for v in g.vertices() if g.degcap[v] == 2]
    qi = 0
    while qi < len(queue) and g.live_vertex_count > 2:
        v = queue[qi]
        qi += 1
        if not g.vertex_alive[v] or g.degcap[v] != 2:
            continue
        items = list(g.adj[v].items())
        if len(items) == 1:
            # single capacity-2 edge: removal would be a self-loop
            (a, eid) = items[0]
            g.remove_edge(eid)
            g.kill_vertex(v)
            log.append(Degree2Removal(v, a, None))
            if g.degcap[a] == 2:
                queue.append(a)
        else:
            (a, ea), (b, eb) = items
            c = min(g.edge_cap[ea], g.edge_cap[eb])
            g.remove_edge(ea)
            g.remove_edge(eb)
            g.kill_vertex(v)
            g.add_edge(a, b, c)
            log.append(Degree2Removal(v, a, (a, b)))
            if g.degcap[a] == 2:
                queue.append(a)
            if g.degcap[b] == 2:
                queue.append(b)
    return log


def stitch(
    trees: list[CutTree],
    decomp: BridgeDecomposition,
    logs: list[Degree2Log],
) -> CutTree:
    """Reassemble per-piece cut trees into one tree over the original graph.

    Piece trees contribute their edges through the piece vertex maps,
    spliced degree-2 vertices reattach with weight 2 (following attachment
    chains to a surviving vertex), bridges contribute weight-1 edges, and
    the connected components of the input are linked by weight-0 edges into
    one rooted structure.
    """
    if len(trees) != len(decomp.components):
        raise ValueError("one cut tree per decomposed component is required")
    n = decomp.n_original
    edges: list[tuple[int, int, int]] = []

    for tree, (piece, pmap), log in zip(trees, decomp.components, logs):
        for child, parent, w in tree.edges():
            edges.append((pmap[child], pmap[parent], w))
        removed = {rec.vertex: rec.attach for rec in log}
        resolved: dict[int, int] = {}
        for rec in log:
            a = rec.attach
            chain = []
            while a in removed:
                hop = resolved.get(a)
                if hop is not None:
                    a = hop
                    break
                chain.append(a)
                a = removed[a]
            for x in chain:
                resolved[x] = a
            edges.append((pmap[rec.vertex], pmap[a], 2))

    for u, v in decomp.bridges:
        edges.append((u, v, 1))

    # link the remaining forest components (the input's components) at weight 0
    comp_root = list(range(n))

    def find(x: int) -> int:
        while comp_root[x] != x:
            comp_root[x] = comp_root[comp_root[x]]
            x = comp_root[x]
        return x

    for u, v, _ in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            comp_root[ru] = rv
    reps: list[int] = []
    seen_roots: set[int] = set()
    for v in range(n):
        r = find(v)
        if r not in seen_roots:
            seen_roots.add(r)
            reps.append(v)
    for other in reps[1:]:
        edges.append((other, reps[0], 0))

    return tree_from_edges(n, edges, root=0)
