"""Exact triangle packing and covering numbers by branch and bound.

These are the ground truth the rest of the package is tested against, so
they refuse oversized inputs instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Edge, Graph, Triangle, enumerate_triangles, triangle_edges

TRIANGLE_LIMIT = 200


class OracleRefusal(ValueError):
    """The instance has more triangles than the configured bound."""


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Union[frozenset[Triangle], frozenset[Edge]]
    explored: int


def _setup(g: Graph, limit: int) -> tuple[list[Triangle], list[Edge], list[int]]:
    tris = enumerate_triangles(g)
    if len(tris) > limit:
        raise OracleRefusal(f"{len(tris)} triangles exceeds the bound of {limit}")
    edges = sorted({e for t in tris for e in triangle_edges(t)})
    index = {e: i for i, e in enumerate(edges)}
    masks = [sum(1 << index[e] for e in triangle_edges(t)) for t in tris]
    return tris, edges, masks


def nu_exact(g: Graph, limit: int = TRIANGLE_LIMIT) -> OracleResult:
    """Maximum number of pairwise edge-disjoint triangles.

    Branches on the triangle-edge lying in the fewest live triangles: either
    one of those triangles is packed, or the edge goes unused.
    """
    tris, _, masks = _setup(g, limit)
    best: list[int] = []
    explored = 0

    def search(live: list[int], chosen: list[int]) -> None:
        nonlocal best, explored
        explored += 1
        if len(chosen) > len(best):
            best = chosen[:]
        if not live:
            return
        union = 0
        for i in live:
            union |= masks[i]
        if len(chosen) + min(len(live), union.bit_count() // 3) <= len(best):
            return
        # pick the edge contained in the fewest live triangles
        pick, through = None, None
        bit = union
        while bit:
            e = bit & -bit
            bit ^= e
            hits = [i for i in live if masks[i] & e]
            if through is None or len(hits) < len(through):
                pick, through = e, hits
                if len(hits) == 1:
                    break
        for i in through:
            rest = [j for j in live if not masks[j] & masks[i]]
            chosen.append(i)
            search(rest, chosen)
            chosen.pop()
        search([j for j in live if not masks[j] & pick], chosen)

    search(list(range(len(tris))), [])
    return OracleResult(len(best), frozenset(tris[i] for i in best), explored)


def _greedy_disjoint(live: list[int], masks: list[int]) -> int:
    used = 0
    count = 0
    for i in live:
        if not masks[i] & used:
            used |= masks[i]
            count += 1
    return count


def tau_exact(g: Graph, limit: int = TRIANGLE_LIMIT) -> OracleResult:
    """Minimum number of edges meeting every triangle.

    Branches on the three edges of an unhit triangle; any edge-disjoint set of
    unhit triangles is a lower bound on the edges still needed.
    """
    tris, edges, masks = _setup(g, limit)
    # every triangle edge is a valid (if poor) cover
    best_mask = (1 << len(edges)) - 1
    best = len(edges)
    explored = 0

    def search(live: list[int], chosen: int, size: int) -> None:
        nonlocal best, best_mask, explored
        explored += 1
        if not live:
            if size < best:
                best, best_mask = size, chosen
            return
        if size + _greedy_disjoint(live, masks) >= best:
            return
        t = masks[live[0]]
        while t:
            e = t & -t
            t ^= e
            search([j for j in live if not masks[j] & e], chosen | e, size + 1)

    search(list(range(len(tris))), 0, 0)
    witness = frozenset(e for i, e in enumerate(edges) if best_mask >> i & 1)
    return OracleResult(best, witness, explored)


def check_tuza(g: Graph, limit: int = TRIANGLE_LIMIT) -> tuple[bool, OracleResult, OracleResult]:
    """``(tau <= 2 nu, nu result, tau result)``."""
    nu = nu_exact(g, limit)
    tau = tau_exact(g, limit)
    return tau.value <= 2 * nu.value, nu, tau
