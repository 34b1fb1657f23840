"""Whole-tree min-cut statistics in near-linear time.

Both procedures scan the tree edges in descending weight while merging
endpoint clusters: an edge processed at weight x is the path minimum for
exactly the vertex pairs it joins, so the merge sizes count pairs for the
connectivity distribution, and recording each merge as a binary node
yields the connectivity dendrogram.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .tree import CutTree, query  # re-exported: query belongs to this surface

__all__ = [
    "DisjointSets",
    "Dendrogram",
    "query",
    "connectivity_distribution",
    "connectivity_dendrogram",
]


class DisjointSets:
    """Union-find with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> int:
        """Merge the sets of x and y; returns the surviving root."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return rx


@dataclass
class Dendrogram:
    """Binary merge tree: leaves are the n vertices, labeled infinity.

    Internal node ``n + i`` merges ``children[i]`` at connectivity
    ``labels[i]``; merges happen in descending label order, so labels never
    increase from any leaf toward the root.
    """

    n_leaves: int
    children: list[tuple[int, int]]
    labels: list[int]

    def label(self, node_id: int) -> int | float:
        if node_id < self.n_leaves:
            return math.inf
        return self.labels[node_id - self.n_leaves]

    def node_count(self) -> int:
        return self.n_leaves + len(self.children)

    def leaves_under(self, node_id: int) -> list[int]:
        out = []
        stack = [node_id]
        while stack:
            x = stack.pop()
            if x < self.n_leaves:
                out.append(x)
            else:
                a, b = self.children[x - self.n_leaves]
                stack.append(b)
                stack.append(a)
        return out


def _edges_descending(tree: CutTree) -> list[tuple[int, int, int]]:
    # stable order inside a weight class: ascending child id
    return sorted(tree.edges(), key=lambda e: (-e[2], e[0]))


def connectivity_distribution(tree: CutTree) -> dict[int, int]:
    """Pair counts per connectivity value, keyed in descending weight.

    Equals the histogram of all-pairs queries; the counts always sum to
    n choose 2.  Weight-0 entries count pairs split across components of a
    disconnected input.
    """
    dsu = DisjointSets(tree.n)
    size = dsu.size
    dist: dict[int, int] = {}
    for child, parent, w in _edges_descending(tree):
        a, b = dsu.find(child), dsu.find(parent)
        dist[w] = dist.get(w, 0) + size[a] * size[b]
        dsu.union(a, b)
    return dist


def connectivity_dendrogram(tree: CutTree) -> Dendrogram:
    """Hierarchical clustering by connectivity, one binary node per tree edge.

    Chains of equal-weight edges are binarized in edge order; the shapes
    within a weight class are arbitrary but deterministic.
    """
    n = tree.n
    dsu = DisjointSets(n)
    cluster_node = list(range(n))  # union-find root -> dendrogram node id
    children: list[tuple[int, int]] = []
    labels: list[int] = []
    for child, parent, w in _edges_descending(tree):
        a, b = dsu.find(child), dsu.find(parent)
        children.append((cluster_node[a], cluster_node[b]))
        labels.append(w)
        root = dsu.union(a, b)
        cluster_node[root] = n + len(labels) - 1
    return Dendrogram(n, children, labels)
