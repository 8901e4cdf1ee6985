"""Reducible vertex and edge sets: data model, checker, and constructors.

A certificate names a nonempty target (a vertex set ``V0`` or an edge set
``E0``), a set ``S`` of pairwise edge-disjoint triangles and an edge set ``X``
with ``|X| <= 2|S|`` such that deleting ``X`` destroys every triangle meeting
the target, and every ``S``-edge that avoids the target lies in ``X``.

Constructors take a graph and return a certificate in that graph's vertex
ids, or None when their configuration is absent.  :func:`find_reducible`
runs them in a fixed order and re-checks every result.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .graph import (
    Edge,
    Graph,
    Triangle,
    any_maximum_matching,
    any_minimum_cover,
    bits,
    complement_edge_count,
    components,
    edge,
    enumerate_triangles,
    is_thin,
    max_complement_degree,
    matching_number,
    subsumes,
    to_mask,
    triangle,
    triangle_edges,
    vertex_in_triangle,
)
from .wke import WkeWitness, find_wke, find_wke_structural, verify_wke_witness

VERTEX = "vertex"
EDGE = "edge"


class CertificateError(RuntimeError):
    """A constructor produced a certificate that fails the checker."""


class InvalidWitnessError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    kind: str
    target: frozenset
    triangles: tuple[Triangle, ...]
    X: frozenset[Edge]
    provenance: str

    def relabel(self, labels: Sequence[int]) -> "Certificate":
        """Rename vertex ``i`` to ``labels[i]`` throughout."""
        if self.kind == VERTEX:
            target = frozenset(labels[v] for v in self.target)
        else:
            target = frozenset(edge(labels[u], labels[v]) for u, v in self.target)
        return Certificate(
            self.kind,
            target,
            tuple(sorted(triangle(*(labels[x] for x in t)) for t in self.triangles)),
            frozenset(edge(labels[u], labels[v]) for u, v in self.X),
            self.provenance,
        )


@dataclass(frozen=True)
class ReductionStep:
    certificate: Certificate
    residual: Graph


def _cert(kind: str, target: Iterable, tris: Iterable[Sequence[int]], xs: Iterable[Sequence[int]], prov: str) -> Certificate:
    tris = tuple(sorted(triangle(*t) for t in tris))
    xset = frozenset(edge(*e) for e in xs)
    if kind == VERTEX:
        tgt = frozenset(target)
    else:
        tgt = frozenset(edge(*e) for e in target)
    return Certificate(kind, tgt, tris, xset, prov)


# -- checking --------------------------------------------------------------------

def verify_certificate(g: Graph, c: Certificate) -> tuple[bool, str]:
    """Check every defining condition directly; returns ``(ok, reason)``."""
    if c.kind not in (VERTEX, EDGE):
        return False, f"unknown kind {c.kind!r}"
    if not c.target:
        return False, "target must be nonempty"
    if c.kind == VERTEX:
        for v in c.target:
            if not 0 <= v < g.n:
                return False, f"target vertex {v} not in graph"
    else:
        for u, v in c.target:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return False, f"target edge {u}-{v} not in graph"
    for u, v in c.X:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return False, f"X edge {u}-{v} not in graph"
    s_edges: set[Edge] = set()
    for t in c.triangles:
        a, b, d = t
        if len({a, b, d}) != 3 or not all(0 <= x < g.n for x in t):
            return False, f"malformed triangle {t}"
        if not (g.has_edge(a, b) and g.has_edge(a, d) and g.has_edge(b, d)):
            return False, f"{t} is not a triangle of the graph"
        for e in triangle_edges(t):
            if e in s_edges:
                return False, f"triangles share edge {e}"
            s_edges.add(e)
    if len(c.X) > 2 * len(c.triangles):
        return False, f"|X| = {len(c.X)} exceeds 2|S| = {2 * len(c.triangles)}"
    h = g.without_edges(c.X)
    if c.kind == VERTEX:
        for v in sorted(c.target):
            if vertex_in_triangle(h, v):
                return False, f"G - X still has a triangle through target vertex {v}"
        for u, v in sorted(s_edges):
            if u not in c.target and v not in c.target and (u, v) not in c.X:
                return False, f"S-edge {u}-{v} outside the target is missing from X"
    else:
        for u, v in sorted(c.target):
            if h.has_edge(u, v) and h.rows[u] & h.rows[v]:
                return False, f"G - X still has a triangle through target edge {u}-{v}"
        for e in sorted(s_edges):
            if e not in c.target and e not in c.X:
                return False, f"S-edge {e[0]}-{e[1]} not in the target is missing from X"
    return True, ""


def residual_graph(g: Graph, c: Certificate) -> Graph:
    """``(G - X) - V0`` or ``(G - X) - E0``; labels carry over from ``g``."""
    h = g.without_edges(c.X)
    if c.kind == VERTEX:
        return h.without_vertices(c.target)
    return h.without_edges(c.target)


# -- weak König–Egerváry lifting ----------------------------------------------------

def lift_wke(g: Graph, v: int, g0: Iterable[int], w: WkeWitness, provenance: str = "") -> Certificate:
    """Turn a witness for ``G[G0]`` (in ``g``'s ids) into a certificate at ``v``.

    ``G0`` must be a nonempty union of components of ``G[N(v)]``.  The result
    is a vertex certificate for ``{v}`` when ``G0`` is all of ``N(v)``, and an
    edge certificate for the spokes ``{vx : x in G0}`` otherwise.
    """
    g0_mask = to_mask(g0)
    nb = g.rows[v]
    if not g0_mask or g0_mask & ~nb:
        raise InvalidWitnessError("G0 must be a nonempty subset of N(v)")
    if any(c & g0_mask and c & ~g0_mask for c in components(g, nb)):
        raise InvalidWitnessError("G0 must be a union of components of G[N(v)]")
    local = sorted(bits(g0_mask))
    pos = {x: i for i, x in enumerate(local)}
    sub = g.induced(local)
    try:
        ok = verify_wke_witness(sub, w.relabel(pos))
    except (KeyError, ValueError):
        ok = False
    if not ok:
        raise InvalidWitnessError("witness does not certify G[G0] as weak König–Egerváry")
    tris = [(v, a, b) for a, b in w.matching]
    xs = list(w.matching) + [(v, x) for x in w.cover]
    prov = provenance or f"wke:{w.method or 'given'}"
    if g0_mask == nb:
        return _cert(VERTEX, [v], tris, xs, prov)
    return _cert(EDGE, [(v, x) for x in local], tris, xs, prov)


def _lift_neighborhood(g: Graph, v: int, m: Iterable[Sequence[int]], q: Iterable[int], prov: str) -> Optional[Certificate]:
    w = WkeWitness(frozenset(edge(*e) for e in m), frozenset(q), prov)
    try:
        return lift_wke(g, v, bits(g.rows[v]), w, prov)
    except InvalidWitnessError:
        return None


# -- small helpers ------------------------------------------------------------------

def _low(g: Graph, v: int) -> bool:
    return g.degree(v) <= 6


def _low_mask(g: Graph, mask: int) -> int:
    return to_mask(x for x in bits(mask) if g.degree(x) <= 6)


def _single(mask: int) -> Optional[int]:
    return mask.bit_length() - 1 if mask.bit_count() == 1 else None


def _missing_pairs(g: Graph, mask: int) -> list[Edge]:
    return [(a, b) for a, b in combinations(bits(mask), 2) if not g.has_edge(a, b)]


def _independent(g: Graph, mask: int) -> bool:
    return all(not (g.rows[x] & mask) for x in bits(mask))


def _neighbourhood_witness(g: Graph, mask: int, finder) -> Optional[WkeWitness]:
    # witness for G[mask], translated back to g's vertex ids
    w = finder(g.induced_mask(mask).with_identity_labels())
    return None if w is None else w.relabel(sorted(bits(mask)))


def _clause_a(g: Graph, v: int) -> bool:
    nb = g.rows[v]
    return max_complement_degree(g, nb) <= 1 and complement_edge_count(g, nb) != 2


# -- configurations at one low-degree vertex -----------------------------------------

def comp_matching_certificate(g: Graph, v: int) -> Optional[Certificate]:
    """{v} for a 5- or 6-vertex whose neighbourhood misses two edges or more.

    When the complement of ``G[N(v)]`` has a vertex of degree two or more the
    neighbourhood is weak König–Egerváry; when it is two disjoint edges the
    explicit packings below apply.
    """
    d = g.degree(v)
    if d not in (5, 6):
        return None
    nb = g.rows[v]
    if max_complement_degree(g, nb) > 1:
        w = _neighbourhood_witness(g, nb, find_wke_structural)
        if w is None:
            return None
        return lift_wke(g, v, bits(nb), w, "comp-matching:wke")
    missing = _missing_pairs(g, nb)
    if len(missing) != 2:
        return None
    (w1, w2), (w3, w4) = missing
    rest = sorted(bits(nb & ~to_mask((w1, w2, w3, w4))))
    if d == 5:
        (w5,) = rest
        tris = [(v, w2, w4), (v, w1, w3), (w1, w4, w5), (w2, w3, w5)]
        xs = g.edges_within(nb)
        return _cert(VERTEX, [v], tris, xs, "comp-matching:case1")
    w5, w6 = rest
    tris = [(v, w1, w4), (v, w2, w3), (v, w5, w6), (w1, w3, w5), (w2, w4, w5)]
    xs = g.edges_within(nb & ~(1 << w6)) + [(w5, w6), (v, w6)]
    return _cert(VERTEX, [v], tris, xs, "comp-matching:case2")


def red_pair_certificate(g: Graph, u: int, v: int) -> Optional[Certificate]:
    """{u, v} for adjacent 6^- vertices whose singletons are not reducible."""
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    if g.degree(u) > 6 or g.degree(v) > 6:
        raise ValueError("both endpoints must have degree at most 6")
    if g.degree(u) < 5 or g.degree(v) < 5:
        raise ValueError("red pair needs minimum degree 5 (robust graph)")
    for x in (u, v):
        if max_complement_degree(g, g.rows[x]) > 1:
            raise ValueError(f"neighbourhood complement of {x} has a vertex of degree > 1")
    if g.degree(u) > g.degree(v):
        u, v = v, u
    hm = g.rows[u] & g.rows[v]
    k = hm.bit_count()
    hv = sorted(bits(hm))
    p_mask = g.rows[u] & ~g.closed(v)
    q_mask = g.rows[v] & ~g.closed(u)
    if k == 3:
        p, q = _single(p_mask), _single(q_mask)
        if p is None or q is None or g.count_edges_within(hm) != 3:
            return None
        w1, w2, w3 = hv
        if not (g.has_edge(p, w3) and g.has_edge(q, w2)):
            return None
        tris = [(u, w1, w2), (v, w1, w3), (u, p, w3), (v, q, w2)]
        xs = [(u, v), (v, q), (u, p), (p, w3), (q, w2)] + g.edges_within(hm)
        return _cert(VERTEX, [u, v], tris, xs, "red-pair:case1")
    if k == 4:
        w1 = next((x for x in hv if (g.rows[x] & hm).bit_count() >= 2), None)
        if w1 is None:
            return None
        w2, w3 = list(bits(g.rows[w1] & hm))[:2]
        (w4,) = [x for x in hv if x not in (w1, w2, w3)]
        tris = [(u, w1, w2), (v, w1, w3), (u, v, w4)]
        xs = g.edges_within(hm) + [(u, v)]
        if p_mask.bit_count() > 1 or q_mask.bit_count() > 1:
            raise CertificateError("red pair case 2: outside neighbour is not unique")
        if p_mask:
            p = _single(p_mask)
            tris.append((u, p, w3))
            xs += [(p, u), (p, w3)]
        if q_mask:
            q = _single(q_mask)
            tris.append((v, q, w2))
            xs += [(q, v), (q, w2)]
        if g.count_edges_within(hm) == 6:
            tris.append((w2, w3, w4))
        return _cert(VERTEX, [u, v], tris, xs, "red-pair:case2")
    if k == 5:
        if g.closed(u) != g.closed(v):
            return None
        for w in hv:
            rest = [x for x in hv if x != w]
            a = rest[0]
            for b, c, d in permutations(rest[1:]):
                if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) and g.has_edge(d, a):
                    tris = [(u, a, b), (u, c, d), (v, b, c), (v, a, d), (u, v, w)]
                    xs = [(u, w), (v, w), (u, a), (u, b), (v, c), (v, d), (a, b), (b, c), (c, d), (d, a)]
                    return _cert(VERTEX, [u, v], tris, xs, "red-pair:case3")
        return None
    return None


# -- configurations around high-degree vertices ----------------------------------------

def bigconq_certificate(g: Graph, v: int, w: int) -> Optional[Certificate]:
    """{v} for a 10^+ vertex subsuming the 6^- vertex ``w`` with many 6^- neighbours."""
    d = g.degree(v)
    nb = g.rows[v]
    if d < 10 or not (nb >> w & 1) or g.degree(w) > 6 or not subsumes(g, v, w):
        return None
    a_mask = _low_mask(g, nb)
    b_mask = nb & ~a_mask
    if a_mask.bit_count() < d - 5 or not _independent(g, a_mask):
        return None
    m = any_maximum_matching(g, nb)
    if b_mask.bit_count() <= len(m):
        return _lift_neighborhood(g, v, m, bits(b_mask), "bigconq:ke")
    idle = [b for b in bits(b_mask) if not g.rows[b] & a_mask]
    if idle and len(m) >= b_mask.bit_count() - 1:
        return _lift_neighborhood(g, v, m, bits(b_mask & ~(1 << idle[0])), "bigconq:idle")
    others = a_mask & ~(1 << w)
    reach = 0
    for z in bits(others):
        reach |= g.rows[z] & b_mask
    if reach.bit_count() == 3:
        z1, z2, z3 = list(bits(others))[:3]
        b1, b2, b3 = bits(reach)
        spare = g.rows[w] & b_mask & ~reach
        if not spare:
            return None
        bp = (spare & -spare).bit_length() - 1
        match = [(w, bp), (z1, b1), (z2, b2), (z3, b3)]
        return _lift_neighborhood(g, v, match, bits(b_mask & ~(1 << bp)), "bigconq:case1")
    # Hall's condition holds for B, so a matching saturates it
    return _lift_neighborhood(g, v, m, bits(b_mask), "bigconq:case2")


def _disjoint_edge_pair(g: Graph, mask: int, banned: set[Edge]) -> Optional[tuple[Edge, Edge]]:
    avail = [e for e in g.edges_within(mask) if e not in banned]
    for e, f in combinations(avail, 2):
        if len({*e, *f}) == 4:
            return e, f
    return None


def ninecong_certificate(g: Graph, v: int) -> Optional[Certificate]:
    """{v, w1, w2, w3, w'} for a 9-vertex subsuming three 6^- vertices plus a fourth."""
    if g.degree(v) != 9:
        return None
    nb = g.rows[v]
    low = [x for x in bits(nb) if _low(g, x)]
    subsumed = [x for x in low if subsumes(g, v, x)]
    if len(subsumed) < 3 or len(low) < 4:
        return None
    w1, w2, w3 = subsumed[:3]
    wp = next(x for x in low if x not in (w1, w2, w3))
    wset = to_mask((w1, w2, w3, wp))
    if not _independent(g, wset):
        return None
    if not all(_clause_a(g, x) for x in (w1, w2, w3)) or max_complement_degree(g, g.rows[wp]) > 1:
        return None
    h = [g.rows[x] & ~(1 << v) for x in (w1, w2, w3)]
    hp = g.rows[wp] & nb
    used: set[Edge] = set()
    tris: list[tuple[int, int, int]] = []
    for x, hx in ((w1, h[0]), (w2, h[1])):
        pair = _disjoint_edge_pair(g, hx, used)
        if pair is None:
            return None
        for e in pair:
            tris.append((x, *e))
            used.add(e)
    spare = [e for e in g.edges_within(h[2]) if e not in used]
    pick = None
    for e in spare:
        r_opts = [x for x in bits(h[2]) if x not in e]
        if r_opts:
            pick = (e, r_opts[0])
            break
    if pick is None:
        return None
    (e1, e2), r = pick
    tris += [(w3, e1, e2), (v, w3, r)]
    r1_opts = [x for x in bits(hp) if x != r]
    if not r1_opts:
        return None
    r1 = r1_opts[0]
    tris.append((v, wp, r1))
    v0 = wset | (1 << v)
    z = nb & ~v0
    xs = g.edges_within(z) + [(v, w1), (v, w2), (v, w3), (v, wp)]
    outside = g.rows[wp] & ~g.closed(v)
    if outside.bit_count() > 1:
        return None
    if outside:
        p = _single(outside)
        r2_opts = [x for x in bits(hp) if x not in (r, r1) and g.has_edge(x, p)]
        if not r2_opts:
            return None
        r2 = r2_opts[0]
        tris.append((wp, r2, p))
        xs += [(wp, p), (r2, p)]
    return _cert(VERTEX, bits(v0), tris, xs, "9conq")


def few8_certificate(g: Graph, u: int, v: int) -> Optional[Certificate]:
    """For a 7- or 8-vertex ``u`` subsuming the 5-vertex ``v``.

    Returns {u, v} from an explicit packing, or {u} when the case analysis
    shows ``G[N(u)]`` is weak König–Egerváry.
    """
    if g.degree(u) not in (7, 8) or g.degree(v) != 5 or not g.has_edge(u, v) or not subsumes(g, u, v):
        return None
    if complement_edge_count(g, g.rows[v]) > 1:
        return None
    wm = g.rows[u] & g.rows[v]
    zm = g.rows[u] & ~g.closed(v)
    wv = sorted(bits(wm))
    zv = sorted(bits(zm))
    missing = _missing_pairs(g, wm)
    w1, w2 = missing[0] if missing else (wv[0], wv[1])
    w_edges = g.edges_within(wm)

    def core(w: int, wp: int) -> list[tuple[int, int, int]]:
        return [(u, wp, w1), (v, w, w1), (u, v, w2), (w, wp, w2)]

    z_edges = g.edges_within(zm)
    if z_edges:
        z1, z2 = z_edges[0]
        zstar = [z for z in zv if g.rows[z] & wm]
        if len(w_edges) == 6 and len(zstar) == 3:
            (z0,) = [z for z in zstar if z not in (z1, z2)]
            w = (g.rows[z0] & wm & -(g.rows[z0] & wm)).bit_length() - 1
            a, b, wp = [x for x in wv if x != w]
            w1, w2 = a, b
            tris = core(w, wp) + [(u, z1, z2), (u, z0, w)]
            xs = w_edges + [(u, z) for z in zv] + [(u, v), (z1, z2), (z0, w)]
            return _cert(VERTEX, [u, v], tris, xs, "few-8-nbors:case1a")
        w, wp = [x for x in wv if x not in (w1, w2)]
        for z in zv:
            if len(zstar) >= 2:
                break
            if z not in zstar:
                zstar.append(z)
        tris = core(w, wp) + [(u, z1, z2)]
        xs = w_edges + [(z1, z2), (u, v)] + [(u, z) for z in zstar]
        return _cert(VERTEX, [u, v], tris, xs, "few-8-nbors:case1b")
    # Z independent: look at the bipartite graph J between W and Z
    j = Graph(g.n, [(a, b) for a in wv for b in zv if g.has_edge(a, b)])
    jm = wm | zm
    alpha = matching_number(j, jm)
    if alpha == 0:
        return None
    if alpha == 1:
        hub = next((x for x in wv if all(g.rows[z] & wm == 1 << x for z in zv)), None)
        if hub is None:
            return None
        z = zv[0]
        rest = [x for x in wv if x != hub]
        t = next(((a, b) for a, b in combinations(rest, 2) if g.has_edge(a, b)), None)
        if t is None:
            return None
        (wp,) = [x for x in rest if x not in t]
        return _lift_neighborhood(g, u, [(hub, z), t, (v, wp)], [v, hub, wp], "few-8-nbors:case2a")
    nwz = 0
    for z in zv:
        nwz |= g.rows[z] & wm
    if alpha == 2 and nwz.bit_count() >= 3:
        w = next(x for x in bits(nwz) if x not in (w1, w2))
        z0 = next(z for z in zv if g.has_edge(w, z))
        (wp,) = [x for x in wv if x not in (w, w1, w2)]
        q1, q2 = bits(any_minimum_cover(j, jm))
        tris = core(w, wp) + [(u, z0, w)]
        xs = w_edges + [(u, v), (z0, w), (u, q1), (u, q2)]
        return _cert(VERTEX, [u, v], tris, xs, "few-8-nbors:case2b-i")
    if alpha == 2:
        t1, t2 = [x for x in wv if not nwz >> x & 1]
        m = any_maximum_matching(j, jm)
        m.append((t1, t2) if g.has_edge(t1, t2) else (v, t1))
        return _lift_neighborhood(g, u, m, list(bits(nwz)) + [v], "few-8-nbors:case2b-ii")
    m = any_maximum_matching(j, jm)
    covered = to_mask(x for e in m for x in e)
    (w,) = [x for x in wv if not covered >> x & 1]
    m.append((v, w))
    return _lift_neighborhood(g, u, m, wv, "few-8-nbors:case2c")


def six_dom_seven_certificate(g: Graph, u: int, v: int) -> Optional[Certificate]:
    """{u, v} for a 7-vertex ``u`` subsuming the 6-vertex ``v``."""
    if g.degree(u) != 7 or g.degree(v) != 6 or not g.has_edge(u, v) or not subsumes(g, u, v):
        return None
    if complement_edge_count(g, g.rows[v]) > 1:
        return None
    hm = g.rows[u] & g.rows[v]
    hv = sorted(bits(hm))
    missing = _missing_pairs(g, hm)
    w1, w2 = missing[0] if missing else (hv[0], hv[1])
    w3, w4, w5 = [x for x in hv if x not in (w1, w2)]
    p = _single(g.rows[u] & ~g.closed(v))
    if p is None:
        return None
    tris = [(u, w2, w5), (u, w3, w4), (v, w2, w3), (v, w4, w5), (u, v, w1), (w1, w3, w5)]
    xs = g.edges_within(hm) + [(u, v), (u, p)]
    return _cert(VERTEX, [u, v], tris, xs, "6-dom-7")


def six_perf_seven_certificate(g: Graph, u: int, v: int) -> Optional[Certificate]:
    """{u, v} for a 7-vertex ``u`` adjacent to the thin 6-vertex ``v``."""
    if g.degree(u) != 7 or not g.has_edge(u, v) or not is_thin(g, v):
        return None
    nv = g.rows[v]
    if max_complement_degree(g, nv) > 1 or complement_edge_count(g, nv) != 3:
        return None
    cm = g.rows[u] & nv
    if cm.bit_count() != 4 or g.count_edges_within(cm) != 4:
        return None
    a = (cm & -cm).bit_length() - 1
    b, d = bits(g.rows[a] & cm)
    (c,) = bits(cm & ~to_mask((a, b, d)))
    outside = g.rows[u] & ~g.closed(v)
    q = _single(nv & ~g.closed(u))
    if outside.bit_count() != 2 or q is None:
        return None
    p1, p2 = bits(outside)
    tris = [(u, a, b), (u, c, d), (v, b, c), (v, a, d)]
    xs = g.edges_within(cm) + [(u, v), (u, p1), (u, p2), (v, q)]
    return _cert(VERTEX, [u, v], tris, xs, "6-perf-7")


def few6minus_certificate(g: Graph, v: int) -> Optional[Certificate]:
    """{v} for a 7-, 8- or 9-vertex with more than d(v) - 4 low neighbours."""
    d = g.degree(v)
    if d not in (7, 8, 9):
        return None
    nb = g.rows[v]
    low = _low_mask(g, nb)
    if low.bit_count() <= d - 4 or not _independent(g, low):
        return None
    w = _neighbourhood_witness(g, nb, find_wke_structural)
    if w is None:
        return None
    return lift_wke(g, v, bits(nb), w, "few6minus")


def subsumption_certificate(g: Graph, v: int) -> Optional[Certificate]:
    """Try every subsumption-type configuration centred at ``v``."""
    d = g.degree(v)
    nb = g.rows[v]
    low = [x for x in bits(nb) if _low(g, x)]
    if d >= 10:
        for w in low:
            c = bigconq_certificate(g, v, w)
            if c is not None:
                return c
        return None
    if d == 9:
        return ninecong_certificate(g, v) or few6minus_certificate(g, v)
    if d in (7, 8):
        for y in low:
            c = None
            if g.degree(y) == 5 and subsumes(g, v, y):
                c = few8_certificate(g, v, y)
            elif d == 7 and g.degree(y) == 6 and subsumes(g, v, y):
                c = six_dom_seven_certificate(g, v, y)
            if c is None and d == 7 and is_thin(g, y):
                c = six_perf_seven_certificate(g, v, y)
            if c is not None:
                return c
        return few6minus_certificate(g, v)
    return None


# -- orchestration -----------------------------------------------------------------

def minimize_certificate(g: Graph, c: Certificate) -> Certificate:
    """Drop X-edges that the certificate does not need.

    Both triangle conditions only get harder as X shrinks, so one pass leaves
    an X from which no single edge can be removed.
    """
    xs = set(c.X)
    for e in sorted(c.X):
        xs.discard(e)
        if not verify_certificate(g, replace(c, X=frozenset(xs)))[0]:
            xs.add(e)
    return c if len(xs) == len(c.X) else replace(c, X=frozenset(xs))


def _checked(g: Graph, c: Optional[Certificate]) -> Optional[ReductionStep]:
    if c is None:
        return None
    ok, reason = verify_certificate(g, c)
    if not ok:
        raise CertificateError(f"{c.provenance} produced an invalid certificate: {reason}")
    c = minimize_certificate(g, c)
    return ReductionStep(c, residual_graph(g, c))


def wke_certificate(g: Graph, v: int) -> Optional[Certificate]:
    """Certificate from weak König–Egerváry components of ``G[N(v)]``.

    When every component qualifies the union gives {v}; otherwise the first
    qualifying component gives an edge certificate.
    """
    nb = g.rows[v]
    if not nb:
        return None
    found: list[tuple[int, WkeWitness]] = []
    for comp in components(g, nb):
        w = _neighbourhood_witness(g, comp, find_wke)
        if w is not None:
            found.append((comp, w))
    if not found:
        return None
    if len(found) == len(components(g, nb)):
        m = frozenset().union(*(w.matching for _, w in found))
        q = frozenset().union(*(w.cover for _, w in found))
        methods = sorted({w.method for _, w in found})
        return lift_wke(g, v, bits(nb), WkeWitness(m, q), "wke:" + "+".join(methods))
    comp, w = found[0]
    return lift_wke(g, v, bits(comp), w, f"wke:{w.method}")


def find_reducible(g: Graph) -> Optional[ReductionStep]:
    """First certificate found by the constructors, in a fixed order.

    1. a vertex in no triangle (empty packing, empty X);
    2. weak König–Egerváry neighbourhood components;
    3. 5- and 6-vertices whose neighbourhood misses two edges;
    4. adjacent pairs of 6^- vertices;
    5. subsumption configurations around 7^+ vertices.
    """
    for v in range(g.n):
        if not vertex_in_triangle(g, v):
            return _checked(g, _cert(VERTEX, [v], (), (), "triangle-free-vertex"))
    for v in range(g.n):
        step = _checked(g, wke_certificate(g, v))
        if step is not None:
            return step
    for v in range(g.n):
        if g.degree(v) <= 6:
            step = _checked(g, comp_matching_certificate(g, v))
            if step is not None:
                return step
    for u, v in g.edges():
        if g.degree(u) <= 6 and g.degree(v) <= 6:
            try:
                c = red_pair_certificate(g, u, v)
            except ValueError:
                continue
            step = _checked(g, c)
            if step is not None:
                return step
    for v in range(g.n):
        step = _checked(g, subsumption_certificate(g, v))
        if step is not None:
            return step
    return None


def reduce_all(g: Graph) -> tuple[list[ReductionStep], Graph]:
    """Apply :func:`find_reducible` until the residual is triangle-free or stuck."""
    steps = []
    current = g
    while enumerate_triangles(current):
        step = find_reducible(current)
        if step is None:
            break
        steps.append(step)
        current = step.residual
    return steps, current
