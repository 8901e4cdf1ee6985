import random
from fractions import Fraction

import pytest

from conftest import random_graph
from tuza.graph import Graph, complete_graph, cycle_graph, disjoint_union
from tuza.sparsity import (
    genus_average_degree_bound,
    genus_edge_gate,
    genus_vertex_threshold,
    mad,
    mad_bruteforce,
)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(4), Fraction(3)),
        (Graph(5, complete_graph(4).edges() + [(3, 4)]), Fraction(3)),
        (petersen(), Fraction(3)),
        (Graph(1), Fraction(0)),
        (Graph(2, [(0, 1)]), Fraction(1)),
        (cycle_graph(7), Fraction(2)),
        (disjoint_union(complete_graph(5), complete_graph(3)), Fraction(4)),
    ],
)
def test_known_values(g, expected):
    d = mad(g)
    assert d.value == expected
    w = sorted(d.witness)
    sub = g.induced(w)
    assert Fraction(2 * sub.m, sub.n) == expected


def test_string_form():
    assert str(mad(complete_graph(4))) == "3/1"
    assert str(mad(Graph(3, [(0, 1), (1, 2)]))) == "4/3"


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        mad(Graph(0))
    with pytest.raises(ValueError):
        mad_bruteforce(Graph(0))


def test_brute_force_guard():
    with pytest.raises(ValueError):
        mad_bruteforce(Graph(21))


def test_matches_brute_force_random():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        assert mad(g).value == mad_bruteforce(g).value


def test_euler_gates():
    # K7 embeds on the torus: 21 = 3(7 - 2 + 2)
    assert genus_edge_gate(7, 21, 1)
    assert not genus_edge_gate(7, 21, 0)
    assert genus_average_degree_bound(12, 1) == 6
    assert genus_average_degree_bound(24, 2) == Fraction(13, 2)
    assert genus_vertex_threshold(2) == 12
    with pytest.raises(ValueError):
        genus_edge_gate(2, 1, 0)
    with pytest.raises(ValueError):
        genus_vertex_threshold(1)


def test_genus_threshold_gives_average_degree_below_seven():
    for genus in range(2, 6):
        n = genus_vertex_threshold(genus) + 1
        assert genus_average_degree_bound(n, genus) < 7
