"""Max-flow engines: values, cuts, minimality, and cross-checks."""

import random

import networkx as nx
import pytest

from cuttree import (
    DinitzEngine,
    max_flow_bidir,
    max_flow_unidir,
    min_cut_from_flow,
    normalize,
)
from cuttree import gen

from helpers import brute_force_min_cut, cut_capacity

PATH = [(0, 1), (1, 2)]
K4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
C5 = [(i, (i + 1) % 5) for i in range(5)]
BARBELL = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]


def test_unidir_examples():
    g, _ = normalize(PATH)
    assert max_flow_unidir(g, 0, 2)[0] == 1
    g, _ = normalize(K4)
    assert all(max_flow_unidir(g, s, t)[0] == 3 for s in range(4) for t in range(s + 1, 4))
    g, _ = normalize(C5)
    assert max_flow_unidir(g, 0, 2)[0] == 2


def test_bidir_examples():
    g, _ = normalize(PATH)
    assert max_flow_bidir(g, 0, 2)[0] == 1
    g, _ = normalize(BARBELL)
    assert max_flow_bidir(g, 2, 3)[0] == 1


def test_disconnected_pair_has_zero_flow():
    g, _ = normalize([(0, 1), (2, 3)])
    value, fs = max_flow_unidir(g, 0, 2)
    assert value == 0 and all(f == 0 for f in fs.flow)
    assert max_flow_bidir(g, 0, 2)[0] == 0


def test_same_vertex_rejected():
    g, _ = normalize(PATH)
    with pytest.raises(ValueError):
        max_flow_unidir(g, 1, 1)
    with pytest.raises(ValueError):
        max_flow_bidir(g, 1, 1)


def test_min_cut_from_flow_examples():
    g, _ = normalize(PATH)
    _, fs = max_flow_unidir(g, 0, 2)
    assert min_cut_from_flow(g, fs, 0) == [0]

    g, _ = normalize(BARBELL)
    _, fs = max_flow_unidir(g, 0, 4)
    assert sorted(min_cut_from_flow(g, fs, 0)) == [0, 1, 2]

    g, _ = normalize(K4)
    _, fs = max_flow_unidir(g, 0, 3)
    assert min_cut_from_flow(g, fs, 0) == [0]


def test_min_cut_from_flow_rejects_non_maximum():
    from cuttree import FlowState

    g, _ = normalize(PATH)
    with pytest.raises(ValueError):
        min_cut_from_flow(g, FlowState([0, 0], 0, 2, 0), 0)


def _random_graphs(count, max_n, seed):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(2, max_n)
        p = rng.uniform(0.05, 0.7)
        yield normalize(gen.gnp(n, p, seed=seed + i))[0]


def test_bidir_matches_unidir_on_random_graphs():
    rng = random.Random(11)
    for g in _random_graphs(200, 60, seed=5000):
        verts = list(g.vertices())
        if len(verts) < 2:
            continue
        engine = DinitzEngine(g)
        for _ in range(3):
            s, t = rng.sample(verts, 2)
            assert engine.max_flow(s, t) == max_flow_unidir(g, s, t)[0]


def test_flow_values_match_networkx():
    rng = random.Random(23)
    for g in _random_graphs(30, 25, seed=9000):
        verts = list(g.vertices())
        if len(verts) < 2:
            continue
        ng = nx.Graph()
        ng.add_nodes_from(verts)
        for u, v, c in g.edge_list():
            ng.add_edge(u, v, capacity=c)
        s, t = rng.sample(verts, 2)
        expect = int(nx.maximum_flow_value(ng, s, t))
        assert max_flow_unidir(g, s, t)[0] == expect
        assert max_flow_bidir(g, s, t)[0] == expect


def test_cut_capacity_equals_flow_value():
    rng = random.Random(3)
    for g in _random_graphs(60, 20, seed=100):
        verts = list(g.vertices())
        if len(verts) < 2:
            continue
        s, t = rng.sample(verts, 2)
        value, fs = max_flow_unidir(g, s, t)
        side = min_cut_from_flow(g, fs, s)
        assert cut_capacity(g, set(side)) == value


def test_min_cut_side_is_minimal():
    rng = random.Random(4)
    for g in _random_graphs(40, 10, seed=200):
        verts = list(g.vertices())
        if len(verts) < 2:
            continue
        s, t = rng.sample(verts, 2)
        value, fs = max_flow_unidir(g, s, t)
        assert value == brute_force_min_cut(g, s, t)
        side = set(min_cut_from_flow(g, fs, s))
        others = sorted(side - {s})
        for mask in range(1 << len(others)):
            subset = {s}
            for i, v in enumerate(others):
                if mask >> i & 1:
                    subset.add(v)
            if subset != side:
                assert cut_capacity(g, subset) > value or subset == side


def test_flow_bounded_by_endpoint_degrees():
    rng = random.Random(6)
    for g in _random_graphs(50, 30, seed=300):
        verts = list(g.vertices())
        if len(verts) < 2:
            continue
        s, t = rng.sample(verts, 2)
        value, _ = max_flow_unidir(g, s, t)
        assert value <= min(g.degree(s), g.degree(t))


def test_engine_min_side_is_a_minimum_cut():
    rng = random.Random(8)
    for g in _random_graphs(80, 25, seed=400):
        verts = list(g.vertices())
        if len(verts) < 2:
            continue
        s, t = rng.sample(verts, 2)
        engine = DinitzEngine(g)
        value = engine.max_flow(s, t)
        side = set(engine.min_side(s, t))
        assert (s in side) != (t in side)
        assert cut_capacity(g, side) == value


def test_engine_reuse_across_queries():
    g, _ = normalize(gen.gnp_connected(40, 0.2, seed=77))
    engine = DinitzEngine(g)
    rng = random.Random(9)
    for _ in range(30):
        s, t = rng.sample(range(40), 2)
        assert engine.max_flow(s, t) == max_flow_unidir(g, s, t)[0]
