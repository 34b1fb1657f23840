"""Shared test utilities: independent oracles and structural checkers."""

from __future__ import annotations

from collections import deque

from cuttree import max_flow_unidir, query
from cuttree.builder import GHState
from cuttree.graph import UndirectedGraph
from cuttree.packing import Packing
from cuttree.tree import CutTree


def all_pairs_oracle(g: UndirectedGraph) -> dict[tuple[int, int], int]:
    verts = list(g.vertices())
    return {
        (s, t): max_flow_unidir(g, s, t)[0]
        for i, s in enumerate(verts)
        for t in verts[i + 1 :]
    }


def assert_tree_matches(g: UndirectedGraph, tree: CutTree, oracle=None) -> None:
    """The master property: every tree query equals the max-flow oracle."""
    if oracle is None:
        oracle = all_pairs_oracle(g)
    for (s, t), lam in oracle.items():
        got = query(tree, s, t)
        assert got == lam, f"pair ({s},{t}): tree={got} oracle={lam}"


def cut_capacity(g: UndirectedGraph, side: set[int]) -> int:
    total = 0
    for eid in g.edge_ids():
        if (g.edge_u[eid] in side) != (g.edge_v[eid] in side):
            total += g.edge_cap[eid]
    return total


def brute_force_min_cut(g: UndirectedGraph, s: int, t: int) -> int:
    """Minimum s-t cut by subset enumeration; only for tiny graphs."""
    others = [v for v in g.vertices() if v != s and v != t]
    best = None
    for mask in range(1 << len(others)):
        side = {s}
        for i, v in enumerate(others):
            if mask >> i & 1:
                side.add(v)
        c = cut_capacity(g, side)
        if best is None or c < best:
            best = c
    return best


def check_tree_edge_weights(g: UndirectedGraph, tree: CutTree) -> None:
    """Each tree edge weight equals the capacity of the cut it induces in g."""
    children: list[list[int]] = [[] for _ in range(tree.n)]
    for v in range(tree.n):
        p = tree.parent[v]
        if p >= 0:
            children[p].append(v)
    for v in range(tree.n):
        if tree.parent[v] < 0:
            continue
        side = set()
        stack = [v]
        while stack:
            x = stack.pop()
            side.add(x)
            stack.extend(children[x])
        assert cut_capacity(g, side) == tree.weight[v]


def check_state_invariants(state: GHState) -> None:
    """Structural health of an in-progress construction.

    Node member sets partition the original vertices, the node tree has one
    edge fewer than it has nodes, and within each arena piece all
    non-marker vertices belong to one node whose markers' tree edges are
    incident to it.
    """
    seen: set[int] = set()
    for node in state.nodes:
        for v in node.members:
            assert v not in seen, f"vertex {v} in two nodes"
            assert state.node_of[v] is node
            seen.add(v)
    for v in range(state.n_orig):
        node = state.node_of[v]
        if node is not None:
            assert v in node.members

    assert len(state.tree_edges) == len(state.nodes) - 1

    # node-level tree is acyclic and spans all nodes
    index = {id(node): i for i, node in enumerate(state.nodes)}
    parent = list(range(len(state.nodes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in state.tree_edges:
        a, b = find(index[id(e.a)]), find(index[id(e.b)])
        assert a != b, "cycle between tree nodes"
        parent[a] = b

    # per arena piece: unique owning node, markers wired to it
    g = state.g
    visited = [False] * g.id_bound()
    for start in g.vertices():
        if visited[start]:
            continue
        piece = []
        visited[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            piece.append(u)
            for w in g.adj[u]:
                if not visited[w]:
                    visited[w] = True
                    queue.append(w)
        plain = [v for v in piece if v not in state.phi and v < state.n_orig]
        if not plain:
            continue
        owner = state.node_of[plain[0]]
        assert owner is not None
        assert owner.members == set(plain)
        for w in piece:
            if w in state.phi:
                edge = state.phi[w]
                assert edge.a is owner or edge.b is owner, (
                    f"marker {w} maps to an edge not incident to its node"
                )


def check_packing_structure(g: UndirectedGraph, packing: Packing, beta=None) -> None:
    """Edge-disjointness and the rooted-tree degree conditions."""
    used_fwd = [0] * len(g.edge_cap)
    used_rev = [0] * len(g.edge_cap)
    count = [0] * g.id_bound()
    for tree in packing.trees:
        assert packing.root not in tree, "root has an incoming tree edge"
        members = set(tree) | {packing.root}
        outdeg: dict[int, int] = {}
        for child, par in tree.items():
            assert par in members, "tree is not connected through its root"
            count[child] += 1
            outdeg[par] = outdeg.get(par, 0) + 1
            eid = g.edge_id(child, par)
            assert eid is not None
            if g.edge_u[eid] == par:
                used_fwd[eid] += 1
            else:
                used_rev[eid] += 1
        # parent chains terminate at the root: no cycles
        for child in tree:
            hops, x = 0, child
            while x != packing.root:
                x = tree[x]
                hops += 1
                assert hops <= len(tree)
        if beta is not None:
            assert all(d <= beta for d in outdeg.values())
        count[packing.root] += 1
    for eid in g.edge_ids():
        assert used_fwd[eid] <= g.edge_cap[eid]
        assert used_rev[eid] <= g.edge_cap[eid]
        assert used_fwd[eid] == packing.used_fwd[eid]
        assert used_rev[eid] == packing.used_rev[eid]
    for v in g.vertices():
        assert count[v] == packing.count[v]


def graph_signature(g: UndirectedGraph):
    """Comparable content identity: live vertices plus merged edge multiset."""
    verts = frozenset(g.vertices())
    edges = {}
    for eid in g.edge_ids():
        u, v = g.edge_u[eid], g.edge_v[eid]
        key = (u, v) if u < v else (v, u)
        edges[key] = edges.get(key, 0) + g.edge_cap[eid]
    return verts, edges
