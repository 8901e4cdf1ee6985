import random
from itertools import combinations

import pytest

from conftest import random_graph
from tuza.graph import Graph, complete_graph, cycle_graph, disjoint_union, enumerate_triangles, triangle_edges
from tuza.oracles import OracleRefusal, check_tuza, nu_exact, tau_exact

BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def naive_nu(g):
    tris = enumerate_triangles(g)
    for k in range(len(tris), 0, -1):
        for c in combinations(tris, k):
            es = [e for t in c for e in triangle_edges(t)]
            if len(es) == len(set(es)):
                return k
    return 0


def naive_tau(g):
    tris = enumerate_triangles(g)
    for k in range(g.m + 1):
        for c in combinations(g.edges(), k):
            s = set(c)
            if all(s.intersection(triangle_edges(t)) for t in tris):
                return k


@pytest.mark.parametrize(
    "g, nu, tau",
    [
        (complete_graph(4), 1, 2),
        (complete_graph(5), 2, 4),
        (BOWTIE, 2, 2),
        (cycle_graph(6), 0, 0),
        (complete_graph(7), 7, 9),
        (complete_graph(9), 12, 16),
    ],
)
def test_known_values(g, nu, tau):
    a, b = nu_exact(g), tau_exact(g)
    assert (a.value, b.value) == (nu, tau)
    assert len(a.witness) == nu and len(b.witness) == tau
    used = [e for t in a.witness for e in triangle_edges(t)]
    assert len(used) == len(set(used))
    rest = g.without_edges(b.witness)
    assert not enumerate_triangles(rest)


def test_against_naive_search():
    rng = random.Random(9)
    done = 0
    while done < 150:
        g = random_graph(rng, rng.randint(3, 7), 0.6)
        if g.m > 13:
            continue
        done += 1
        assert nu_exact(g).value == naive_nu(g)
        assert tau_exact(g).value == naive_tau(g)


def test_refusal_above_bound():
    with pytest.raises(OracleRefusal):
        nu_exact(complete_graph(5), limit=9)
    with pytest.raises(OracleRefusal):
        tau_exact(complete_graph(12))  # 220 triangles

def test_disjoint_k4s_are_tight():
    for k in (1, 2, 3):
        g = disjoint_union(*[complete_graph(4)] * k)
        ok, nu, tau = check_tuza(g)
        assert ok and (nu.value, tau.value) == (k, 2 * k)


def test_sandwich_and_edge_deletion_monotonicity():
    rng = random.Random(10)
    for _ in range(60):
        g = random_graph(rng, rng.randint(4, 8), 0.6)
        nu, tau = nu_exact(g).value, tau_exact(g).value
        assert nu <= tau <= 3 * nu
        if g.m:
            e = rng.choice(g.edges())
            h = g.without_edges([e])
            nu2, tau2 = nu_exact(h).value, tau_exact(h).value
            assert nu - 1 <= nu2 <= nu and tau - 1 <= tau2 <= tau
