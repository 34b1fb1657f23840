"""Gomory-Hu state machine: splitting, markers, finalization."""

import random

import pytest

from cuttree import init, normalize, query
from cuttree import gen
from cuttree.tree import NO_PARENT

from helpers import (
    all_pairs_oracle,
    assert_tree_matches,
    check_state_invariants,
    check_tree_edge_weights,
)


def test_init_single_node():
    g, _ = normalize([(0, 1), (1, 2), (2, 0)])
    state = init(g)
    assert len(state.nodes) == 1
    assert state.nodes[0].members == {0, 1, 2}
    assert state.tree_edges == [] and state.phi == {}


def test_init_single_vertex_already_complete():
    g = normalize([])[0]
    g.add_vertex()
    state = init(g)
    assert len(state.nodes[0]) == 1
    tree = state.finalize()
    assert tree.n == 1 and tree.parent == [NO_PARENT]


def test_two_vertex_separation():
    g, _ = normalize([(0, 1)])
    state = init(g)
    state.separate(state.nodes[0], 0, 1)
    assert len(state.nodes) == 2
    assert state.tree_edges[0].weight == 1
    check_state_invariants(state)
    tree = state.finalize()
    assert query(tree, 0, 1) == 1


def test_path_separation_uses_size_one_shortcut():
    g, _ = normalize([(0, 1), (1, 2)])
    state = init(g)
    bound_before = g.id_bound()
    state.separate(state.nodes[0], 0, 2)
    # minimal cut {0}: no contraction happened, 0 became the marker
    assert g.id_bound() == bound_before
    assert 0 in state.phi
    assert state.nodes[1].members == {0}
    assert state.tree_edges[0].weight == 1
    check_state_invariants(state)


def test_triangle_full_construction():
    g, _ = normalize([(0, 1), (1, 2), (2, 0)])
    state = init(g)
    node = state.nodes[0]
    state.separate(node, 0, 1)
    check_state_invariants(state)
    big = next(n for n in state.nodes if len(n.members) > 1)
    s, t = sorted(big.members)[:2]
    state.separate(big, s, t)
    check_state_invariants(state)
    tree = state.finalize()
    assert all(w == 2 for _, _, w in tree.edges())
    for s in range(3):
        for t in range(s + 1, 3):
            assert query(tree, s, t) == 2


def test_separate_rejects_non_members():
    g, _ = normalize([(0, 1), (1, 2)])
    state = init(g)
    state.separate(state.nodes[0], 0, 2)
    small = state.nodes[1]
    with pytest.raises(ValueError):
        state.separate(small, 0, 2)  # 2 is not a member of {0}
    with pytest.raises(ValueError):
        state.separate(state.nodes[0], 1, 1)


def test_separate_all_makes_exactly_n_minus_1_calls():
    for seed in range(5):
        g, _ = normalize(gen.gnp_connected(12, 0.3, seed=seed))
        state = init(g)
        state.separate_all()
        assert len(state.separation_pairs) == g.n - 1 if g.n else 0
        assert all(len(n.members) == 1 for n in state.nodes)


def test_separate_all_on_singletons_is_noop():
    g, _ = normalize([(0, 1)])
    state = init(g)
    state.separate_all()
    count = len(state.separation_pairs)
    state.separate_all()
    assert len(state.separation_pairs) == count


def test_finalize_requires_singletons():
    g, _ = normalize([(0, 1), (1, 2)])
    state = init(g)
    with pytest.raises(ValueError):
        state.finalize()


def test_star_tree_weights():
    g, _ = normalize([(0, 1), (0, 2), (0, 3)])
    state = init(g)
    state.separate_all()
    tree = state.finalize()
    assert sorted(tree.edges()) == [(1, 0, 1), (2, 0, 1), (3, 0, 1)]


def test_arbitrary_choosers_all_give_valid_trees():
    rng = random.Random(42)

    def random_chooser(node):
        return tuple(rng.sample(sorted(node.members), 2))

    def extreme_chooser(node):
        ms = sorted(node.members)
        return ms[0], ms[-1]

    for seed in range(8):
        edges = gen.gnp_connected(14, 0.35, seed=900 + seed)
        for chooser in (None, random_chooser, extreme_chooser):
            g, _ = normalize(edges)
            oracle = all_pairs_oracle(g)
            state = init(g.copy())
            state.separate_all(pair_chooser=chooser)
            check_state_invariants(state)
            tree = state.finalize()
            assert_tree_matches(g, tree, oracle)
            check_tree_edge_weights(g, tree)


def test_unidirectional_flow_callback_gives_same_tree_validity():
    from cuttree.builder import unidirectional_flow

    for seed in range(5):
        g, _ = normalize(gen.preferential_attachment(15, 2, seed=seed))
        state = init(g.copy())
        state.separate_all(flow=unidirectional_flow)
        assert_tree_matches(g, state.finalize())


def test_invariants_hold_after_every_separation():
    g0, _ = normalize(gen.gnp_connected(12, 0.4, seed=31))
    state = init(g0)
    while any(len(n.members) > 1 for n in state.nodes):
        node = next(n for n in state.nodes if len(n.members) > 1)
        s, t = sorted(node.members)[:2]
        state.separate(node, s, t)
        check_state_invariants(state)
