import networkx as nx
import pytest

from tuza.graph import Graph, complement

ACCEPTANCE_LINES: list[str] = []


def nx_of(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(index), [(index[u], index[v]) for u, v in h.edges()])


def random_graph(rng, n, p):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def cocktail(k):
    return complement(Graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)]))


def attach(base, neighbourhoods):
    n = base.n
    edges = base.edges()
    for i, nb in enumerate(neighbourhoods):
        edges += [(n + i, x) for x in nb]
    return Graph(n + len(neighbourhoods), edges)


def sparse_fixture(rng):
    """Cocktail-party base with 5-vertices and 6-vertices hung on cliques or near-cliques."""
    base = cocktail(6)
    hung = []
    for _ in range(rng.randint(1, 8)):
        kind = rng.choice(("k5", "k6", "k6-", "thin"))
        pairs = rng.sample(range(6), 3)
        if kind == "thin":
            nb = [x for p in pairs for x in (2 * p, 2 * p + 1)]
        elif kind == "k6-":
            nb = [2 * pairs[0], 2 * pairs[0] + 1] + [2 * p + rng.randint(0, 1) for p in rng.sample(range(6), 6) if p != pairs[0]][:4]
        else:
            size = 5 if kind == "k5" else 6
            nb = [2 * p + rng.randint(0, 1) for p in rng.sample(range(6), size)]
        hung.append(nb)
    return attach(base, hung)


@pytest.fixture
def record_acceptance():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
