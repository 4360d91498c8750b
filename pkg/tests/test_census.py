import json

import numpy as np
import pytest
from oracles import cycles_per_node, random_corpus, walk_traces

from netmoments.census import (
    census,
    pentagon_counts,
    quadrangle_counts,
    triangle_counts,
)
from netmoments.graph import from_edges
from netmoments.spectral import closed_walk_counts


def test_triangles(named):
    assert triangle_counts(named["K3"]).tolist() == [1, 1, 1]
    assert triangle_counts(named["K4"]).tolist() == cycles_per_node(named["K4"], 3).tolist() == [3] * 4
    assert census(named["K4"]).Delta == 4
    assert triangle_counts(named["C5"]).tolist() == [0] * 5


def test_quadrangles(named):
    assert quadrangle_counts(named["C4"]).tolist() == [1] * 4
    assert census(named["C4"]).Q == 1
    assert quadrangle_counts(named["K4"]).tolist() == cycles_per_node(named["K4"], 4).tolist() == [3] * 4
    assert census(named["K4"]).Q == 3
    assert census(named["petersen"]).Q == cycles_per_node(named["petersen"], 4).sum() // 4 == 0


def test_pentagons(named):
    assert pentagon_counts(named["C5"]).tolist() == [1] * 5
    assert census(named["C5"]).Pi == 1
    assert census(named["K4"]).Pi == 0
    pet = pentagon_counts(named["petersen"])
    assert pet.tolist() == cycles_per_node(named["petersen"], 5).tolist() == [6] * 10
    assert census(named["petersen"]).Pi == 12


def test_k4_aggregates(named):
    c = census(named["K4"])
    assert c.aggregates() == {"n": 4, "e": 6, "Delta": 4, "Q": 3, "Pi": 0, "W2": 36, "C_dt": 36}


def test_empty_graph():
    c = census(from_edges(5, []))
    assert c.aggregates() == {"n": 5, "e": 0, "Delta": 0, "Q": 0, "Pi": 0, "W2": 0, "C_dt": 0}


def test_k5_pentagons():
    # K5: 4!/2 = 12 five-cycles, each through every node
    g = from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert pentagon_counts(g).tolist() == [12] * 5


@pytest.mark.parametrize("chunk", range(4))
def test_oracle_equivalence(chunk):
    graphs = random_corpus(200, seed=11)[chunk::4]
    rng = np.random.default_rng(chunk)
    graphs += [random_graph_n10(rng) for _ in range(5)]
    for g in graphs:
        c = census(g)
        np.testing.assert_array_equal(c.triangles_per_node, cycles_per_node(g, 3))
        np.testing.assert_array_equal(c.quadrangles_per_node, cycles_per_node(g, 4))
        np.testing.assert_array_equal(c.pentagons_per_node, cycles_per_node(g, 5))


def random_graph_n10(rng):
    from oracles import random_graph

    return random_graph(rng, 10, float(rng.uniform(0.2, 0.8)))


def test_divisibility_and_w2():
    for g in random_corpus(100, seed=5):
        c = census(g)
        assert c.triangles_per_node.sum() % 3 == 0
        assert c.quadrangles_per_node.sum() % 4 == 0
        assert c.pentagons_per_node.sum() % 5 == 0
        assert c.W2 >= 2 * c.e
        assert (c.W2 == 2 * c.e) == bool(np.all(c.degree <= 1))


def test_closed_walk_consistency():
    for g in random_corpus(60, seed=9):
        c = census(g)
        w = closed_walk_counts(g, 5)
        assert 8 * c.Q + 2 * c.W2 - 2 * c.e == w[3] == walk_traces(g)[3]
        assert 10 * c.Pi + 10 * c.C_dt - 30 * c.Delta == w[4]


def test_serialization(named):
    c = census(named["K4"])
    d = json.loads(json.dumps(c.to_dict()))
    assert "degree" not in d and d["Q"] == 3
    d = json.loads(json.dumps(c.to_dict(per_node=True)))
    assert d["pentagons_per_node"] == [0, 0, 0, 0]
    assert d["triangles_per_node"] == [3, 3, 3, 3]


def test_deterministic(named):
    g = named["petersen"]
    a, b = census(g), census(g)
    assert a.aggregates() == b.aggregates()
