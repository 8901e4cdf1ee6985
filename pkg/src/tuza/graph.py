"""Immutable simple graphs backed by bitset adjacency rows.

Vertices are the integers ``0 .. n-1``.  Each graph also carries a tuple of
labels (by default the identity) so that subgraphs extracted from a host keep
track of which host vertex each of their vertices came from.

Edges are always reported as sorted pairs ``(u, v)`` with ``u < v`` and
triangles as sorted triples.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def triangle(a: int, b: int, c: int) -> Triangle:
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


def triangle_edges(t: Sequence[int]) -> tuple[Edge, Edge, Edge]:
    a, b, c = sorted(t)
    return ((a, b), (a, c), (b, c))


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A simple undirected graph; never mutated after construction."""

    __slots__ = ("n", "rows", "labels", "_m")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Optional[Sequence[int]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._init(n, tuple(rows), labels)

    def _init(self, n: int, rows: tuple[int, ...], labels: Optional[Sequence[int]]) -> None:
        self.n = n
        self.rows = rows
        self.labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self._m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def from_rows(cls, rows: Sequence[int], labels: Optional[Sequence[int]] = None) -> "Graph":
        g = cls.__new__(cls)
        g._init(len(rows), tuple(rows), labels)
        return g

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def adj(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def closed(self, v: int) -> int:
        """Bitmask of N[v]."""
        return self.rows[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edges_within(self, mask: int) -> list[Edge]:
        out = []
        for u in bits(mask):
            for v in bits(self.rows[u] & mask & ~((2 << u) - 1)):
                out.append((u, v))
        return out

    def count_edges_within(self, mask: int) -> int:
        return sum((self.rows[u] & mask).bit_count() for u in bits(mask)) // 2

    def label_of(self, v: int) -> int:
        return self.labels[v]

    def index_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.rows == other.rows and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.rows, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- derived graphs --------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """G[W] with vertices renumbered in increasing order of their ids here.

        The labels of the result are this graph's labels of the kept vertices,
        so ``sub.labels[i]`` names the host vertex behind ``i``.
        """
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range for n={self.n}")
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for w in bits(self.rows[v]):
                if w in pos:
                    r |= 1 << pos[w]
            rows.append(r)
        return Graph.from_rows(rows, [self.labels[v] for v in keep])

    def induced_mask(self, mask: int) -> "Graph":
        return self.induced(bits(mask))

    def without_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph.from_rows(rows, self.labels)

    def without_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = to_mask(vertices)
        return self.induced(v for v in range(self.n) if not drop >> v & 1)

    def with_identity_labels(self) -> "Graph":
        return Graph.from_rows(self.rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[W]`` and the bijection from ``W`` onto ``0..|W|-1``."""
    keep = sorted(set(vertices))
    sub = g.induced(keep)
    return sub, {v: i for i, v in enumerate(keep)}


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    rows = [(full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)]
    return Graph.from_rows(rows, g.labels)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for h in graphs:
        edges.extend((u + off, v + off) for u, v in h.edges())
        off += h.n
    return Graph(off, edges)


# -- triangles ---------------------------------------------------------------

def enumerate_triangles(g: Graph) -> list[Triangle]:
    """All 3-cliques, lexicographic on sorted triples."""
    out = []
    rows = g.rows
    for a in range(g.n):
        higher = rows[a] >> (a + 1) << (a + 1)
        for b in bits(higher):
            for c in bits(higher & rows[b] & ~((2 << b) - 1)):
                out.append((a, b, c))
    return out


def triangles_through(g: Graph, v: int) -> list[Triangle]:
    out = []
    nb = g.rows[v]
    for a in bits(nb):
        for b in bits(nb & g.rows[a] & ~((2 << a) - 1)):
            out.append(triangle(v, a, b))
    return out


def has_triangle(g: Graph) -> bool:
    rows = g.rows
    for a in range(g.n):
        for b in bits(rows[a] & ~((2 << a) - 1)):
            if rows[a] & rows[b]:
                return True
    return False


def vertex_in_triangle(g: Graph, v: int) -> bool:
    rows = g.rows
    return any(rows[v] & rows[a] for a in bits(rows[v]))


# -- connectivity ----------------------------------------------------------------

def components(g: Graph, mask: Optional[int] = None) -> list[int]:
    """Connected components of ``G[mask]`` as bitmasks, ordered by least vertex."""
    remaining = g.vertex_mask if mask is None else mask
    out = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph, mask: Optional[int] = None) -> Optional[tuple[int, int]]:
    """Two-colouring of ``G[mask]`` as a pair of masks, or None if odd cycle."""
    remaining = g.vertex_mask if mask is None else mask
    side = [0, 0]
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        color = {start: 0}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in bits(g.rows[v] & remaining):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
        for v, c in color.items():
            side[c] |= 1 << v
            remaining &= ~(1 << v)
    return side[0], side[1]


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def blocks(g: Graph) -> tuple[list[frozenset[int]], frozenset[int]]:
    """Blocks (2-connected pieces and bridges) and cut vertices.

    Isolated vertices belong to no block.  Blocks are sorted by their sorted
    vertex tuples.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    t = 0
    for root in range(n):
        if disc[root] != -1 or not g.rows[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[Edge] = []
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    found.sort(key=lambda b: sorted(b))
    return found, frozenset(cuts)


def _is_hin_nonbipartite(g: Graph, mask: int) -> bool:
    """True if G[mask] is K3, K4, or K2 joined with an independent set."""
    k = mask.bit_count()
    degs = sorted((g.rows[v] & mask).bit_count() for v in bits(mask))
    if k == 4 and degs == [3, 3, 3, 3]:
        return True
    if k < 3:
        return False
    hubs = [v for v in bits(mask) if (g.rows[v] & mask).bit_count() == k - 1]
    if len(hubs) < 2:
        return False
    a, b = hubs[0], hubs[1]
    hub_mask = (1 << a) | (1 << b)
    return all((g.rows[v] & mask) == hub_mask for v in bits(mask & ~hub_mask))


def block_is_hin(g: Graph, block: Iterable[int]) -> bool:
    """Block is bipartite or one of K3, K4, K2 + independent set joined."""
    mask = to_mask(block)
    return bipartition(g, mask) is not None or _is_hin_nonbipartite(g, mask)


def has_long_odd_cycle(g: Graph) -> bool:
    """True iff some cycle of odd length at least 5 exists.

    Each cycle lives inside one block, and a 2-connected graph without such
    a cycle is bipartite, K4, or K2 joined with an independent set; so it is
    enough to test each block against that catalogue.
    """
    found, _ = blocks(g)
    return any(not block_is_hin(g, b) for b in found)


# -- matchings and covers --------------------------------------------------------

def _matching_in(rows: Sequence[int], mask: int) -> list[Edge]:
    """A maximum matching of the graph induced on ``mask`` (exact, memoised)."""

    @lru_cache(maxsize=None)
    def best(rem: int) -> tuple[int, tuple[Edge, ...]]:
        # drop vertices with no neighbour left
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            if rows[v] & rem:
                break
            rem ^= low
        if not rem:
            return 0, ()
        v = (rem & -rem).bit_length() - 1
        rest = rem & ~(1 << v)
        top, chosen = best(rest)
        for w in bits(rows[v] & rest):
            size, sub = best(rest & ~(1 << w))
            if size + 1 > top:
                top, chosen = size + 1, ((v, w),) + sub
        return top, chosen

    result = list(best(mask)[1])
    best.cache_clear()
    return result


def matching_number(g: Graph, mask: Optional[int] = None) -> int:
    return len(_matching_in(g.rows, g.vertex_mask if mask is None else mask))


def any_maximum_matching(g: Graph, mask: Optional[int] = None) -> list[Edge]:
    return sorted(_matching_in(g.rows, g.vertex_mask if mask is None else mask))


def maximum_matching(g: Graph) -> list[Edge]:
    """The lexicographically least maximum matching, as a sorted edge list."""
    target = matching_number(g)
    chosen: list[Edge] = []
    free = g.vertex_mask
    need = target
    for u, v in g.edges():
        if need == 0:
            break
        if not (free >> u & 1 and free >> v & 1):
            continue
        rest = free & ~(1 << u) & ~(1 << v)
        if matching_number(g, rest) == need - 1:
            chosen.append((u, v))
            free = rest
            need -= 1
    return chosen


def _cover_size(rows: Sequence[int], mask: int) -> tuple[int, int]:
    """Minimum vertex cover of the graph induced on ``mask`` -> (size, cover mask)."""

    @lru_cache(maxsize=None)
    def solve(rem: int) -> tuple[int, int]:
        pick, best_deg = -1, 0
        for v in bits(rem):
            d = (rows[v] & rem).bit_count()
            if d > best_deg:
                pick, best_deg = v, d
        if best_deg == 0:
            return 0, 0
        if best_deg <= 2:
            return _cover_paths_cycles(rows, rem)
        a_size, a_cov = solve(rem & ~(1 << pick))
        nb = rows[pick] & rem
        b_size, b_cov = solve(rem & ~nb & ~(1 << pick))
        if a_size + 1 <= b_size + nb.bit_count():
            return a_size + 1, a_cov | (1 << pick)
        return b_size + nb.bit_count(), b_cov | nb

    result = solve(mask)
    solve.cache_clear()
    return result


def _cover_paths_cycles(rows: Sequence[int], rem: int) -> tuple[int, int]:
    """Exact cover when every vertex has degree at most 2 (paths and cycles)."""
    size, cover = 0, 0
    seen = 0
    for start in bits(rem):
        if seen >> start & 1:
            continue
        comp = 0
        frontier = 1 << start
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v] & rem
            frontier = nxt & ~comp
        seen |= comp
        verts = list(bits(comp))
        if len(verts) == 1:
            continue
        ends = [v for v in verts if (rows[v] & rem).bit_count() == 1]
        first = ends[0] if ends else verts[0]
        order = [first]
        prev_mask = 1 << first
        while True:
            nxt = rows[order[-1]] & rem & ~prev_mask
            if not nxt:
                break
            w = (nxt & -nxt).bit_length() - 1
            order.append(w)
            prev_mask |= 1 << w
        # take every second vertex starting from the second one
        for i in range(1, len(order), 2):
            cover |= 1 << order[i]
            size += 1
        if not ends and len(order) % 2 == 1:
            cover |= 1 << order[0]
            size += 1
    return size, cover


def cover_number(g: Graph, mask: Optional[int] = None) -> int:
    return _cover_size(g.rows, g.vertex_mask if mask is None else mask)[0]


def any_minimum_cover(g: Graph, mask: Optional[int] = None) -> int:
    return _cover_size(g.rows, g.vertex_mask if mask is None else mask)[1]


def minimum_vertex_cover(g: Graph) -> list[int]:
    """The lexicographically least minimum vertex cover, as a sorted list."""
    target = cover_number(g)
    chosen: list[int] = []
    rem = g.vertex_mask
    need = target
    for v in range(g.n):
        if need == 0:
            break
        if not (g.rows[v] & rem):
            continue
        trial = rem & ~(1 << v)
        if cover_number(g, trial) == need - 1:
            chosen.append(v)
            rem = trial
            need -= 1
    return chosen


def is_matching(g: Graph, edges: Iterable[Sequence[int]]) -> bool:
    used = 0
    for u, v in edges:
        if not g.has_edge(u, v) or used >> u & 1 or used >> v & 1:
            return False
        used |= (1 << u) | (1 << v)
    return True


def is_vertex_cover(g: Graph, cover: int, skip: Iterable[Edge] = ()) -> bool:
    skipped = {edge(*e) for e in skip}
    for u, v in g.edges():
        if (u, v) in skipped:
            continue
        if not (cover >> u & 1 or cover >> v & 1):
            return False
    return True


# -- local structure ---------------------------------------------------------------

def neighborhood_graph(g: Graph, v: int) -> Graph:
    """G[N(v)]; its labels are the vertex ids of ``g``."""
    return Graph.from_rows(g.induced(g.neighbors(v)).rows, g.neighbors(v))


def max_complement_degree(g: Graph, mask: int) -> int:
    k = mask.bit_count()
    return max((k - 1 - (g.rows[w] & mask).bit_count() for w in bits(mask)), default=0)


def complement_edge_count(g: Graph, mask: int) -> int:
    k = mask.bit_count()
    return k * (k - 1) // 2 - g.count_edges_within(mask)


def is_robust(g: Graph) -> Optional[tuple[int, frozenset[int]]]:
    """None when robust, else the first violating ``(v, component)``.

    An isolated vertex is reported with an empty component, since robustness
    is meant to force minimum degree at least 5.
    """
    for v in range(g.n):
        if not g.rows[v]:
            return v, frozenset()
        for comp in components(g, g.rows[v]):
            if comp.bit_count() < 5:
                return v, frozenset(bits(comp))
    return None


def subsumes(g: Graph, u: int, v: int) -> bool:
    """N[u] contains N[v]."""
    nv = g.closed(v)
    return g.closed(u) & nv == nv


def is_thin(g: Graph, v: int) -> bool:
    if g.degree(v) != 6:
        return False
    nb = g.rows[v]
    comp_rows = [0] * g.n
    for w in bits(nb):
        comp_rows[w] = nb & ~g.rows[w] & ~(1 << w)
    return len(_matching_in(comp_rows, nb)) >= 3
