"""Every graph on at most seven vertices, one per isomorphism class.

Backed by the networkx graph atlas, which lists all 1253 such graphs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from networkx.generators.atlas import graph_atlas_g

from .graph import Graph, is_connected

ATLAS_MAX_N = 7


@lru_cache(maxsize=1)
def _atlas() -> tuple[Graph, ...]:
    return tuple(Graph(h.number_of_nodes(), h.edges()) for h in graph_atlas_g())


def all_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """Graphs with exactly ``n`` vertices, optionally only the connected ones."""
    if not 0 <= n <= ATLAS_MAX_N:
        raise ValueError(f"n must be between 0 and {ATLAS_MAX_N}")
    for g in _atlas():
        if g.n == n and (not connected or is_connected(g)):
            yield g


def graphs_up_to(nmax: int, connected: bool = False) -> Iterator[Graph]:
    """Graphs with 1..nmax vertices."""
    for n in range(1, nmax + 1):
        yield from all_graphs(n, connected)


def min_degree_extensions(graphs) -> Iterator[Graph]:
    """Graphs obtained by adding one vertex of minimum degree, with repeats.

    Deleting a minimum-degree vertex from any graph on n + 1 vertices leaves a
    graph on n vertices, so feeding every class on n vertices reaches every
    class on n + 1 vertices at least once.
    """
    for g in graphs:
        n = g.n
        deg = g.degrees()
        for s in range(1 << n):
            k = s.bit_count()
            if any(deg[u] + (s >> u & 1) < k for u in range(n)):
                continue
            yield Graph.from_rows([r | ((s >> u & 1) << n) for u, r in enumerate(g.rows)] + [s])


def connected_graphs_covering(n: int) -> Iterator[Graph]:
    """Every connected graph on ``n <= 8`` vertices at least once (repeats allowed for n = 8)."""
    if n <= ATLAS_MAX_N:
        yield from all_graphs(n, connected=True)
        return
    if n != ATLAS_MAX_N + 1:
        raise ValueError(f"n must be at most {ATLAS_MAX_N + 1}")
    for g in min_degree_extensions(all_graphs(ATLAS_MAX_N)):
        if is_connected(g):
            yield g
