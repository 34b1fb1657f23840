"""Greedy edge-disjoint tree packing rooted at high-degree vertices.

Repeated depth-first searches from a root r over the bidirected graph
build edge-disjoint r-trees; a capacity-c edge exposes c directed slots
per orientation.  Any vertex contained in as many trees as its degree has
its trivial cut certified as a minimum cut against r, so all such vertices
can be split off without running a single max-flow.  Breadth-first trees
would strip the root bare in one round; depth-first construction with an
optional per-vertex out-degree limit avoids creating dead ends.
"""

from __future__ import annotations

from dataclasses import dataclass

from .builder import GHState
from .graph import UndirectedGraph


@dataclass
class Packing:
    """A set of edge-disjoint rooted trees plus per-vertex containment counts.

    Each tree is a child-to-parent map over the vertices it contains;
    ``used_fwd``/``used_rev`` count consumed directed slots per edge id.
    """

    root: int
    trees: list[dict[int, int]]
    count: list[int]
    used_fwd: list[int]
    used_rev: list[int]


def greedy_pack(g: UndirectedGraph, root: int, beta: int | None = None) -> Packing:
    """Pack edge-disjoint trees rooted at ``root`` by repeated DFS.

    Within one tree every vertex is entered at most once and spends at most
    ``beta`` outgoing slots (None means no limit).  A per-vertex rotating
    cursor persists across trees so successive trees consume different
    first edges.  Construction stops at the first empty tree.
    """
    nb = g.id_bound()
    ne = len(g.edge_cap)
    adj, cap, eu = g.adj, g.edge_cap, g.edge_u
    limit = beta if beta is not None else 1 << 60

    snap: list[list[tuple[int, int]] | None] = [None] * nb
    cursor = [0] * nb
    in_tree = [0] * nb
    outdeg = [0] * nb
    examined = [0] * nb
    od_mark = [0] * nb
    used_fwd = [0] * ne
    used_rev = [0] * ne
    count = [0] * nb
    trees: list[dict[int, int]] = []

    epoch = 0
    while True:
        epoch += 1
        tree: dict[int, int] = {}
        in_tree[root] = epoch
        od_mark[root] = epoch
        outdeg[root] = 0
        examined[root] = 0
        stack = [root]
        while stack:
            v = stack[-1]
            sv = snap[v]
            if sv is None:
                sv = snap[v] = list(adj[v].items())
            width = len(sv)
            advanced = False
            while examined[v] < width and outdeg[v] < limit:
                w, eid = sv[cursor[v] % width]
                cursor[v] += 1
                examined[v] += 1
                if in_tree[w] == epoch:
                    continue
                if eu[eid] == v:
                    if used_fwd[eid] >= cap[eid]:
                        continue
                    used_fwd[eid] += 1
                else:
                    if used_rev[eid] >= cap[eid]:
                        continue
                    used_rev[eid] += 1
                tree[w] = v
                count[w] += 1
                outdeg[v] += 1
                in_tree[w] = epoch
                od_mark[w] = epoch
                outdeg[w] = 0
                examined[w] = 0
                stack.append(w)
                advanced = True
                break
            if not advanced:
                stack.pop()
        if not tree:
            break
        count[root] += 1
        trees.append(tree)
    return Packing(root, trees, count, used_fwd, used_rev)


def find_trivial_cuts(packing: Packing, g: UndirectedGraph) -> list[int]:
    """Vertices whose containment count reaches their degree, ascending.

    For each returned v the trivial cut {v} is a minimum v-root cut, since
    the packing witnesses degree-many edge-disjoint paths from the root.
    """
    root = packing.root
    count = packing.count
    degcap = g.degcap
    return [v for v in g.vertices() if v != root and count[v] == degcap[v]]


def apply_packing(state: GHState, alpha: int, beta: int | None, stats=None) -> int:
    """Split off packing-certified vertices from the initial node.

    Roots are the top-``alpha`` degree vertices of the initial node's graph
    (ties to the smaller id).  Each certified pair {v, root} separates
    through the size-one-cut path: no max-flow runs and the graph is left
    untouched, so certificates from one packing stay valid for the next.
    Returns the number of cuts applied.
    """
    if alpha <= 0:
        return 0
    node0 = state.nodes[0]
    if len(node0.members) < 2:
        return 0
    degcap = state.g.degcap
    roots = sorted(node0.members, key=lambda v: (-degcap[v], v))[:alpha]
    cuts = 0
    for root in roots:
        node = state.node_of[root]
        if node is None or len(node.members) < 2:
            continue
        packing = greedy_pack(state.g, root, beta)
        for v in find_trivial_cuts(packing, state.g):
            if v >= state.n_orig or state.node_of[v] is not node:
                continue
            if len(node.members) < 2:
                break
            state.separate_known_cut(node, v, root, [v], degcap[v])
            cuts += 1
    if stats is not None:
        stats.packing_cuts += cuts
    return cuts
