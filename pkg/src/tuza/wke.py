"""Weak König–Egerváry graphs: witnesses, exhaustive search, constructions.

A witness for ``H`` is a matching ``M`` and a vertex set ``Q`` with
``|Q| <= |M|`` such that every edge of ``H`` outside ``M`` has an endpoint in
``Q``.  All witnesses here use the vertex ids of the graph they were computed
on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .graph import (
    Edge,
    Graph,
    any_maximum_matching,
    any_minimum_cover,
    bipartition,
    bits,
    blocks,
    block_is_hin,
    components,
    cover_number,
    edge,
    is_matching,
    matching_number,
    to_mask,
)

BRUTE_FORCE_LIMIT = 16


@dataclass(frozen=True)
class WkeWitness:
    matching: frozenset[Edge]
    cover: frozenset[int]
    method: str = field(default="", compare=False)

    def relabel(self, mapping) -> "WkeWitness":
        return WkeWitness(
            frozenset(edge(mapping[u], mapping[v]) for u, v in self.matching),
            frozenset(mapping[x] for x in self.cover),
            self.method,
        )


@dataclass(frozen=True)
class AnchoredWkeWitness(WkeWitness):
    """A witness in which ``anchor`` is in the cover or missed by the matching."""

    anchor: int = -1


def _witness(matching, cover, method: str) -> WkeWitness:
    return WkeWitness(frozenset(edge(u, v) for u, v in matching), frozenset(cover), method)


def verify_wke_witness(h: Graph, w: WkeWitness) -> bool:
    for x in w.cover:
        if not 0 <= x < h.n:
            raise ValueError(f"cover vertex {x} not in graph")
    for u, v in w.matching:
        if not (0 <= u < h.n and 0 <= v < h.n):
            raise ValueError(f"matching edge {u}-{v} not in graph")
    if not is_matching(h, w.matching):
        return False
    if len(w.cover) > len(w.matching):
        return False
    q = to_mask(w.cover)
    for u, v in h.edges():
        if (u, v) not in w.matching and not (q >> u & 1 or q >> v & 1):
            return False
    if isinstance(w, AnchoredWkeWitness):
        a = w.anchor
        if a not in w.cover and any(a in e for e in w.matching):
            return False
    return True


# -- exhaustive ----------------------------------------------------------------

def _witness_for_cover(h: Graph, q: int, avoid: int = 0) -> Optional[list[Edge]]:
    """A matching M making ``q`` a valid cover of H - M, if any.

    Outside ``q`` the graph must induce a matching F (all of it goes into M);
    M is then topped up with a maximum matching on the vertices F misses.
    Vertices in ``avoid`` must stay unmatched.
    """
    outside = h.vertex_mask & ~q
    forced = []
    used = 0
    for v in bits(outside):
        nb = h.rows[v] & outside
        if nb.bit_count() > 1:
            return None
        if nb and avoid >> v & 1:
            return None
        if nb and not used >> v & 1:
            w = nb.bit_length() - 1
            forced.append(edge(v, w))
            used |= (1 << v) | (1 << w)
    extra = any_maximum_matching(h, h.vertex_mask & ~used & ~avoid)
    if len(forced) + len(extra) < q.bit_count():
        return None
    return sorted(forced + extra)


def find_wke_bruteforce(h: Graph) -> Optional[WkeWitness]:
    """Complete search; returns the witness with the smallest, lex-first cover."""
    if h.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    top = matching_number(h)
    for k in range(top + 1):
        for cover in combinations(range(h.n), k):
            m = _witness_for_cover(h, to_mask(cover))
            if m is not None:
                return _witness(m, cover, "brute-force")
    return None


def find_anchored_wke_bruteforce(h: Graph, anchor: int) -> Optional[AnchoredWkeWitness]:
    """Complete search for a witness whose cover holds ``anchor`` or whose matching misses it."""
    if not 0 <= anchor < h.n:
        raise ValueError(f"anchor {anchor} not in graph")
    if h.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    for k in range(matching_number(h) + 1):
        for cover in combinations(range(h.n), k):
            q = to_mask(cover)
            avoid = 0 if q >> anchor & 1 else 1 << anchor
            m = _witness_for_cover(h, q, avoid)
            if m is not None:
                return AnchoredWkeWitness(frozenset(m), frozenset(cover), "brute-force", anchor)
    return None


# -- anchored witnesses for blocks ------------------------------------------------

def _ke_witness(h: Graph, mask: Optional[int] = None) -> tuple[list[Edge], int]:
    mask = h.vertex_mask if mask is None else mask
    return any_maximum_matching(h, mask), any_minimum_cover(h, mask)


def anchored_wke(b: Graph, v: int) -> Optional[AnchoredWkeWitness]:
    """Witness for a block (2-connected graph or single edge) anchored at ``v``.

    Available when the block is bipartite, K3, K4, or K2 joined with an
    independent set; None otherwise.
    """
    if not 0 <= v < b.n:
        raise ValueError(f"anchor {v} not in graph")
    full = b.vertex_mask
    if bipartition(b) is not None:
        beta = cover_number(b)
        without_v = full & ~(1 << v)
        if cover_number(b, without_v) == beta - 1:
            # v lies in a minimum cover
            q = any_minimum_cover(b, without_v) | (1 << v)
            m = any_maximum_matching(b)
        else:
            # some maximum matching misses v
            q = any_minimum_cover(b)
            m = any_maximum_matching(b, without_v)
        return AnchoredWkeWitness(frozenset(m), frozenset(bits(q)), "bipartite", v)
    if not block_is_hin(b, range(b.n)):
        return None
    others = [x for x in range(b.n) if x != v]
    if b.n == 3:
        return AnchoredWkeWitness(frozenset([edge(*others)]), frozenset([v]), "hin-k3", v)
    if b.n == 4:
        # K4 or K4 minus an edge: pair v with a mate so the remaining two are adjacent
        for mate in others:
            rest = [x for x in others if x != mate]
            if b.has_edge(v, mate) and b.has_edge(*rest):
                m = [edge(v, mate), edge(*rest)]
                return AnchoredWkeWitness(frozenset(m), frozenset([v, mate]), "hin-k4", v)
        raise AssertionError("K4-type block without a perfect matching")
    hubs = [x for x in range(b.n) if b.degree(x) == b.n - 1]
    q = frozenset(hubs[:2])
    if v in q:
        m = any_maximum_matching(b)
    else:
        m = any_maximum_matching(b, full & ~(1 << v))
    return AnchoredWkeWitness(frozenset(m), q, "hin-book", v)


# -- sufficient conditions ------------------------------------------------------

def _longodd_witness(h: Graph) -> Optional[WkeWitness]:
    """Leaf-block elimination for graphs with no odd cycle longer than 3."""
    h = h.with_identity_labels()
    matching: set[Edge] = set()
    cover: set[int] = set()
    work = [c for c in components(h) if c.bit_count() > 1]
    while work:
        mask = work.pop()
        sub = h.induced_mask(mask)
        found, cuts = blocks(sub)
        if len(found) == 1:
            block = found[0]
            bsub = sub.induced(block)
            # anchoring at the last vertex keeps the matching lexicographically small
            w = anchored_wke(bsub, bsub.n - 1)
            if w is None:
                return None
            lab = bsub.labels
            matching.update(edge(lab[a], lab[b]) for a, b in w.matching)
            cover.update(lab[x] for x in w.cover)
            continue
        # a leaf block holds exactly one cut vertex
        leaf = next(b for b in found if len(b & cuts) == 1)
        (cut,) = leaf & cuts
        bsub = sub.induced(leaf)
        anchor = sorted(leaf).index(cut)
        w = anchored_wke(bsub, anchor)
        if w is None:
            return None
        lab = bsub.labels
        matching.update(edge(lab[a], lab[b]) for a, b in w.matching)
        cover.update(lab[x] for x in w.cover)
        leaf_mask = to_mask(sub.labels[x] for x in leaf)
        cut_label = sub.labels[cut]
        if anchor in w.cover:
            rest = mask & ~leaf_mask
        else:
            rest = (mask & ~leaf_mask) | (1 << cut_label)
        work.extend(c for c in components(h, rest) if c.bit_count() > 1)
    return _witness(matching, cover, "longodd")


def _is_connected(h: Graph) -> bool:
    return len(components(h)) <= 1


def _ind_witness(h: Graph) -> Optional[WkeWitness]:
    if h.n < 6 or not _is_connected(h) or cover_number(h) > 3:
        return None
    if matching_number(h) <= 2:
        w = _longodd_witness(h)
        return None if w is None else _witness(w.matching, w.cover, "ind")
    m, q = _ke_witness(h)
    return _witness(m, bits(q), "ind")


def _weak_comp_matching_witness(h: Graph) -> Optional[WkeWitness]:
    n = h.n
    if n not in (5, 6) or not _is_connected(h):
        return None
    full = h.vertex_mask
    pick = None
    for u in range(n):
        non = full & ~h.closed(u)
        if non.bit_count() >= 2:
            z = list(bits(non))
            pick = (u, z[0], z[1])
            break
    if pick is None:
        return None
    u, z1, z2 = pick
    alpha = matching_number(h)
    if alpha < n - 3:
        w = _longodd_witness(h)
        return None if w is None else _witness(w.matching, w.cover, "weak-comp-matching")
    trio = (1 << u) | (1 << z1) | (1 << z2)
    if not h.has_edge(z1, z2):
        return _witness(any_maximum_matching(h), bits(full & ~trio), "weak-comp-matching")
    rest = full & ~(1 << z1) & ~(1 << z2)
    if matching_number(h, rest) == alpha - 1:
        m = [edge(z1, z2)] + any_maximum_matching(h, rest)
        return _witness(m, bits(full & ~trio), "weak-comp-matching")
    if n == 5:
        return _witness(any_maximum_matching(h), (z1, z2), "weak-comp-matching")
    w = _ind_witness(h)
    if w is not None:
        return _witness(w.matching, w.cover, "weak-comp-matching")
    # H - {z1, z2} is a triangle plus an isolated vertex
    tri = next(c for c in components(h, rest) if c.bit_count() == 3)
    m = any_maximum_matching(h)
    inside = [e for e in m if tri >> e[0] & 1 and tri >> e[1] & 1]
    if len(inside) != 1:
        raise AssertionError("maximum matching must use one triangle edge")
    (y,) = bits(tri & ~to_mask(inside[0]))
    return _witness(m, (y, z1, z2), "weak-comp-matching")


def _structural_connected(h: Graph) -> Optional[WkeWitness]:
    if bipartition(h) is not None:
        m, q = _ke_witness(h)
        return _witness(m, bits(q), "bipartite")
    if h.n <= 4:
        w = _longodd_witness(h)
        return None if w is None else _witness(w.matching, w.cover, "deg4")
    alpha = matching_number(h)
    if alpha <= 1 or (h.n > 5 and alpha == 2):
        w = _longodd_witness(h)
        return None if w is None else _witness(w.matching, w.cover, "small")
    for rule in (_ind_witness, _weak_comp_matching_witness, _longodd_witness):
        w = rule(h)
        if w is not None:
            return w
    return None


def find_wke_structural(h: Graph) -> Optional[WkeWitness]:
    """Witness from the first applicable sufficient condition, else None.

    Rules, in order: bipartite, at most four vertices, matching number at
    most one (or two on more than five vertices), independent set of size
    n-3, complement with a vertex of degree at least two (n in {5, 6}), and
    no odd cycle longer than 3.  Disconnected graphs are handled one
    component at a time.
    """
    h = h.with_identity_labels()
    if len(components(h)) <= 1:
        return _structural_connected(h)
    comps = [c for c in components(h) if c.bit_count() > 1]
    matching: set[Edge] = set()
    cover: set[int] = set()
    methods = []
    for c in comps:
        sub = h.induced_mask(c)
        w = _structural_connected(sub)
        if w is None:
            return None
        lab = sub.labels
        matching.update(edge(lab[a], lab[b]) for a, b in w.matching)
        cover.update(lab[x] for x in w.cover)
        methods.append(w.method)
    method = methods[0] if len(set(methods)) == 1 else "components"
    return _witness(matching, cover, method if methods else "bipartite")


def find_wke(h: Graph) -> Optional[WkeWitness]:
    """Structural rules first, exhaustive search as the fallback."""
    w = find_wke_structural(h)
    if w is None and h.n <= BRUTE_FORCE_LIMIT:
        w = find_wke_bruteforce(h)
    return w


__all__ = [
    "AnchoredWkeWitness",
    "WkeWitness",
    "anchored_wke",
    "find_wke",
    "find_anchored_wke_bruteforce",
    "find_wke_bruteforce",
    "find_wke_structural",
    "verify_wke_witness",
]
