"""The cut tree itself: a rooted weighted tree answering min-cut queries.

For any two vertices the minimum edge weight on their tree path equals
their connectivity in the original graph, so a query is a walk toward the
common ancestor tracking the running minimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INFINITY = math.inf
NO_PARENT = -1


@dataclass
class CutTree:
    """Immutable parent-array encoding of a cut tree.

    ``parent[v]`` is ``NO_PARENT`` for the root (and for dead id slots in
    intermediate per-piece trees); ``weight[v]`` is the capacity of the cut
    induced by removing the edge to the parent.
    """

    n: int
    parent: list[int]
    weight: list[int]
    depth: list[int]

    def edges(self) -> list[tuple[int, int, int]]:
        """Tree edges as (child, parent, weight)."""
        return [
            (v, self.parent[v], self.weight[v])
            for v in range(self.n)
            if self.parent[v] != NO_PARENT
        ]


def query(tree: CutTree, s: int, t: int) -> int | float:
    """Connectivity of ``s`` and ``t``: the path minimum, by naive ascent.

    Lifts whichever endpoint is deeper until the walks join.  ``s == t``
    returns :data:`INFINITY`.
    """
    n = tree.n
    if not (0 <= s < n and 0 <= t < n):
        raise ValueError(f"vertex out of range: ({s}, {t})")
    if s == t:
        return INFINITY
    parent = tree.parent
    weight = tree.weight
    depth = tree.depth
    du, dv = depth[s], depth[t]
    best = None
    u, v = s, t
    while u != v:
        if du >= dv:
            w = weight[u]
            if best is None or w < best:
                best = w
            u = parent[u]
            du -= 1
        else:
            w = weight[v]
            if best is None or w < best:
                best = w
            v = parent[v]
            dv -= 1
    return best


def tree_from_edges(n: int, edges: list[tuple[int, int, int]], root: int = 0) -> CutTree:
    """Root an undirected weighted tree given as (u, v, w) triples."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, w in edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    parent = [NO_PARENT] * n
    weight = [0] * n
    depth = [0] * n
    seen = [False] * n
    if n:
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for v, w in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    weight[v] = w
                    depth[v] = depth[u] + 1
                    stack.append(v)
    return CutTree(n, parent, weight, depth)
