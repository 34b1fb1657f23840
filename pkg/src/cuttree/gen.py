"""Seeded synthetic graphs so benchmarks and tests need no downloads."""

from __future__ import annotations

import random


def gnp(n: int, p: float, seed: int) -> list[tuple[int, int]]:
    """Erdos-Renyi G(n, p) edge list."""
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return edges


def gnp_connected(n: int, p: float, seed: int, max_tries: int = 200) -> list[tuple[int, int]]:
    """G(n, p) conditioned on connectivity, by rejection."""
    for attempt in range(max_tries):
        edges = gnp(n, p, seed + 7919 * attempt)
        if _is_connected(n, edges):
            return edges
    raise RuntimeError(f"no connected G({n}, {p}) sample in {max_tries} tries")


def preferential_attachment(n: int, m: int, seed: int) -> list[tuple[int, int]]:
    """Barabasi-Albert style growth: each new vertex attaches m edges.

    Targets are sampled proportionally to degree, distinct per new vertex,
    starting from a complete graph on m + 1 vertices.  Always connected.
    """
    if n < m + 1:
        raise ValueError("need n >= m + 1")
    rng = random.Random(seed)
    edges = []
    endpoints: list[int] = []  # one entry per edge endpoint: degree-weighted urn
    for u in range(m + 1):
        for v in range(u + 1, m + 1):
            edges.append((u, v))
            endpoints.append(u)
            endpoints.append(v)
    for u in range(m + 1, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(endpoints[rng.randrange(len(endpoints))])
        for v in sorted(targets):
            edges.append((v, u))
            endpoints.append(u)
            endpoints.append(v)
    return edges


def bridged_clusters(
    clusters: int, cluster_size: int, seed: int, path_len: int = 1
) -> list[tuple[int, int]]:
    """A chain of cliques joined by paths of ``path_len`` edges.

    ``path_len`` of one gives pure bridges; two or more inserts degree-2
    chain vertices, so both reduction rules fire on this family.
    """
    if clusters < 1 or cluster_size < 2 or path_len < 1:
        raise ValueError("need clusters >= 1, cluster_size >= 2, path_len >= 1")
    rng = random.Random(seed)
    edges = []
    for c in range(clusters):
        base = c * cluster_size
        for u in range(cluster_size):
            for v in range(u + 1, cluster_size):
                edges.append((base + u, base + v))
    next_free = clusters * cluster_size
    for c in range(clusters - 1):
        a = c * cluster_size + rng.randrange(cluster_size)
        b = (c + 1) * cluster_size + rng.randrange(cluster_size)
        prev = a
        for _ in range(path_len - 1):
            edges.append((prev, next_free))
            prev = next_free
            next_free += 1
        edges.append((prev, b))
    return edges


def _is_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n
