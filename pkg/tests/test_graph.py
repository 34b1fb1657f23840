"""Graph substrate: normalization, degrees, contraction, components."""

import pytest
from hypothesis import given, settings, strategies as st

from cuttree import UndirectedGraph, connected_components, normalize

from helpers import graph_signature


def test_normalize_merges_duplicates_and_drops_loops():
    g, mapping = normalize([(0, 1), (1, 0), (1, 1)])
    assert g.n == 2
    assert g.edge_list() == [(0, 1, 2)]
    assert len(mapping) == 2


def test_normalize_relabels_in_first_appearance_order():
    g, mapping = normalize([(5, 9)])
    assert g.n == 2
    assert g.edge_list() == [(0, 1, 1)]
    assert mapping.internal(5) == 0 and mapping.internal(9) == 1
    assert mapping.external(0) == 5 and mapping.external(1) == 9


def test_normalize_triangle_identity():
    g, _ = normalize([(0, 1), (1, 2), (2, 0)])
    assert g.n == 3 and g.m == 3
    assert all(c == 1 for _, _, c in g.edge_list())


def test_normalize_empty_input():
    g, mapping = normalize([])
    assert g.n == 0 and g.m == 0 and len(mapping) == 0


def test_normalize_idempotent():
    g, _ = normalize([(3, 4), (4, 3), (3, 3), (4, 7), (7, 3)])
    relabeled = [(u, v) for u, v, c in g.edge_list() for _ in range(c)]
    g2, _ = normalize(relabeled)
    assert graph_signature(g) == graph_signature(g2)


def test_degree_is_capacity_weighted():
    tri, _ = normalize([(0, 1), (1, 2), (2, 0)])
    assert all(tri.degree(v) == 2 for v in tri.vertices())
    merged, _ = normalize([(0, 1), (1, 0)])
    assert merged.degree(0) == 2
    g = UndirectedGraph(1)
    assert g.degree(0) == 0


def test_contract_triangle():
    g, _ = normalize([(0, 1), (1, 2), (2, 0)])
    g.contract({0, 1}, 3)
    assert g.n == 2
    assert sorted(g.vertices()) == [2, 3]
    assert g.edge_cap[g.edge_id(3, 2)] == 2


def test_contract_k4():
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    g, _ = normalize(edges)
    g.contract({0, 1}, 4)
    assert g.n == 3
    assert g.edge_cap[g.edge_id(4, 2)] == 2
    assert g.edge_cap[g.edge_id(4, 3)] == 2
    assert g.edge_cap[g.edge_id(2, 3)] == 1


def test_contract_single_vertex_keeps_shape():
    g, _ = normalize([(0, 1), (1, 2)])
    g.contract({0}, 3)
    assert g.n == 3
    assert g.edge_id(3, 1) is not None
    assert g.edge_id(1, 2) is not None
    assert g.degree(3) == 1 and g.degree(1) == 2


def test_contract_everything_leaves_one_bare_vertex():
    g, _ = normalize([(0, 1), (1, 2), (2, 0)])
    g.contract({0, 1, 2}, 3)
    assert g.n == 1 and g.m == 0
    assert list(g.vertices()) == [3]


def test_contract_preserves_external_capacity():
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 2)]
    g, _ = normalize(edges)
    before = g.total_capacity()
    internal = g.edge_cap[g.edge_id(0, 1)] + g.edge_cap[g.edge_id(0, 2)] + g.edge_cap[
        g.edge_id(1, 2)
    ]
    g.contract({0, 1, 2}, 4)
    assert g.total_capacity() == before - internal


def test_connected_components_ordering():
    g, _ = normalize([(0, 1), (1, 2), (5, 6)])
    assert connected_components(g) == [[0, 1, 2], [3, 4]]  # 5,6 densify to 3,4
    tri, _ = normalize([(0, 1), (1, 2), (2, 0)])
    assert connected_components(tri) == [[0, 1, 2]]
    empty, _ = normalize([])
    assert connected_components(empty) == []


def test_components_include_isolated_after_contract():
    g, _ = normalize([(0, 1), (1, 2), (2, 0), (3, 4)])
    g.contract({3, 4}, 5)
    assert connected_components(g) == [[0, 1, 2], [5]]


@settings(max_examples=120, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 12), st.integers(0, 12)),
        max_size=60,
    )
)
def test_normalize_properties(raw):
    g, mapping = normalize(raw)
    # no self-loops, each pair stored once, capacity counts multiplicity
    multiplicity = {}
    for a, b in raw:
        if a == b:
            continue
        key = frozenset((a, b))
        multiplicity[key] = multiplicity.get(key, 0) + 1
    assert g.m == len(multiplicity)
    for u, v, c in g.edge_list():
        key = frozenset((mapping.external(u), mapping.external(v)))
        assert multiplicity[key] == c
        assert u != v
    # adjacency consistent with the edge list
    for u, v, c in g.edge_list():
        assert g.adj[u][v] == g.adj[v][u]
    # degree equals the capacity of the trivial cut
    for v in g.vertices():
        incident = sum(c for u, w, c in g.edge_list() if v in (u, w))
        assert g.degree(v) == incident


def test_contract_rejects_bad_ids():
    g, _ = normalize([(0, 1)])
    with pytest.raises(ValueError):
        g.contract(set(), 2)
    with pytest.raises(ValueError):
        g.contract({0}, 1)  # 1 is alive, not fresh
