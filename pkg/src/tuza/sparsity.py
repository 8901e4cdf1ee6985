"""Maximum average degree, computed exactly, and Euler-formula edge gates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import maximum_flow

from .graph import Graph, bits

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class Density:
    """``numerator / denominator`` = 2|E(H)| / |V(H)| for the witness set H."""

    numerator: int
    denominator: int
    witness: frozenset[int]

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        v = self.value
        return f"{v.numerator}/{v.denominator}"


def _density_of(g: Graph, mask: int) -> Density:
    return Density(2 * g.count_edges_within(mask), mask.bit_count(), frozenset(bits(mask)))


def _densest_closure(g: Graph, edges: list[tuple[int, int]], num: int, den: int) -> int:
    """Vertex mask S maximising ``den*|E(S)| - num*|S|`` (minimal such S).

    Source -> edge node (capacity den), edge node -> both endpoints
    (unbounded), vertex -> sink (capacity num).  The source side of a minimum
    cut is the optimal closure.
    """
    m, n = len(edges), g.n
    source, sink = 0, m + n + 1
    big = den * m + 1
    rows, cols, caps = [], [], []
    for i, (u, v) in enumerate(edges):
        e = 1 + i
        rows += [source, e, e]
        cols += [e, 1 + m + u, 1 + m + v]
        caps += [den, big, big]
    for v in range(n):
        rows.append(1 + m + v)
        cols.append(sink)
        caps.append(num)
    size = m + n + 2
    cap = csr_array((np.array(caps, dtype=np.int64), (rows, cols)), shape=(size, size))
    cap.sum_duplicates()
    flow = maximum_flow(cap, source, sink).flow
    residual = (cap - flow).tocsr()
    seen = np.zeros(size, dtype=bool)
    seen[source] = True
    stack = [source]
    while stack:
        x = stack.pop()
        start, stop = residual.indptr[x], residual.indptr[x + 1]
        for y, c in zip(residual.indices[start:stop], residual.data[start:stop]):
            if c > 0 and not seen[y]:
                seen[y] = True
                stack.append(int(y))
    mask = 0
    for v in range(n):
        if seen[1 + m + v]:
            mask |= 1 << v
    return mask


def mad(g: Graph) -> Density:
    """Exact maximum average degree with an induced witness subgraph.

    Binary search over the candidate edge densities ``m'/k``; each probe is a
    parametric min-cut with integer capacities.
    """
    if g.n < 1:
        raise ValueError("mad is undefined for the empty graph")
    edges = g.edges()
    if not edges:
        return _density_of(g, 1)
    candidates = sorted({Fraction(a, k) for k in range(1, g.n + 1) for a in range(0, g.m + 1)})

    def denser_than(c: Fraction) -> int:
        # nonzero mask iff some S has |E(S)|/|S| > c
        return _densest_closure(g, edges, c.numerator, c.denominator)

    lo, hi = 0, len(candidates) - 1
    # invariant: denser_than(candidates[lo]) nonempty, candidates[hi] is not exceeded
    assert denser_than(candidates[lo])
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if denser_than(candidates[mid]):
            lo = mid
        else:
            hi = mid
    witness = denser_than(candidates[lo])
    result = _density_of(g, witness)
    if Fraction(result.numerator, 2 * result.denominator) != candidates[hi]:
        raise AssertionError("densest-subgraph search lost exactness")
    return result


def mad_bruteforce(g: Graph) -> Density:
    """Same contract as :func:`mad`, by enumerating every vertex subset."""
    if g.n < 1:
        raise ValueError("mad is undefined for the empty graph")
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}")
    rows = g.rows
    count = [0] * (1 << g.n)
    best_mask, best_e, best_k = 1, 0, 1
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        e = count[rest] + (rows[v] & rest).bit_count()
        count[mask] = e
        k = mask.bit_count()
        if e * best_k > best_e * k:
            best_mask, best_e, best_k = mask, e, k
    return _density_of(g, best_mask)


def genus_edge_gate(n: int, m: int, genus: int) -> bool:
    """Whether ``m`` edges on ``n`` vertices is allowed on a surface of this genus."""
    if n < 3:
        raise ValueError("the Euler bound needs n >= 3")
    if genus < 0:
        raise ValueError("genus must be non-negative")
    return m <= 3 * (n - 2 + 2 * genus)


def genus_average_degree_bound(n: int, genus: int) -> Fraction:
    """Largest average degree permitted by the Euler bound: 6 + 12(g-1)/n."""
    if n < 3:
        raise ValueError("the Euler bound needs n >= 3")
    return 6 + Fraction(12 * (genus - 1), n)


def genus_vertex_threshold(genus: int) -> int:
    """Graphs of this genus with more vertices than this have average degree < 7."""
    if genus < 2:
        raise ValueError("threshold is stated for genus >= 2")
    return 12 * (genus - 1)
