"""Solve and verify triangle packing/covering pairs; discharging audit.

``solve`` peels reducible sets off the graph until the residual is
triangle-free and returns the accumulated packing ``T`` and cover ``Y``.
``verify_witness`` re-checks the result without trusting ``solve``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .certificates import Certificate, find_reducible, residual_graph, verify_certificate
from .graph import (
    Edge,
    Graph,
    Triangle,
    complement_edge_count,
    enumerate_triangles,
    has_triangle,
    is_robust,
    is_thin,
    max_complement_degree,
    subsumes,
    triangle,
    triangle_edges,
)
from .oracles import nu_exact, tau_exact

FALLBACK_EXACT_LIMIT = 9


def residual_hash(g: Graph) -> str:
    """Digest of a residual's vertex labels and labelled edge set."""
    labelled = sorted((g.labels[u], g.labels[v]) for u, v in g.edges())
    text = f"{list(g.labels)}|{labelled}"
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class TraceEntry:
    """One reduction, in the vertex ids of the input graph."""

    certificate: Certificate
    residual_hash: str


@dataclass(frozen=True)
class TuzaWitness:
    T: frozenset[Triangle]
    Y: frozenset[Edge]
    certified: bool
    trace: tuple[TraceEntry, ...] = ()
    fallback: Optional[str] = None  # None, "exact" or "greedy"
    fallback_T: frozenset[Triangle] = field(default_factory=frozenset)
    fallback_Y: frozenset[Edge] = field(default_factory=frozenset)


def greedy_packing(g: Graph) -> list[Triangle]:
    """A maximal edge-disjoint triangle family, first-fit in lex order."""
    used: set[Edge] = set()
    out = []
    for t in enumerate_triangles(g):
        es = triangle_edges(t)
        if not used.intersection(es):
            used.update(es)
            out.append(t)
    return out


def _relabel_triangles(g: Graph, tris) -> frozenset[Triangle]:
    lab = g.labels
    return frozenset(triangle(lab[a], lab[b], lab[c]) for a, b, c in tris)


def _relabel_edges(g: Graph, edges) -> frozenset[Edge]:
    lab = g.labels
    return frozenset(tuple(sorted((lab[u], lab[v]))) for u, v in edges)


def solve(g: Graph, exact_limit: int = FALLBACK_EXACT_LIMIT) -> TuzaWitness:
    """Packing ``T`` and cover ``Y``; certified means ``|Y| <= 2|T|`` was earned.

    When no reducible set is found (only possible when mad >= 7) the
    remaining residual is handed to the exact oracles if it is small, and
    otherwise to a greedy packing whose edges form the cover.
    """
    current = g.with_identity_labels()
    T: set[Triangle] = set()
    Y: set[Edge] = set()
    trace = []
    while has_triangle(current):
        step = find_reducible(current)
        if step is None:
            break
        cert = step.certificate.relabel(current.labels)
        T.update(cert.triangles)
        Y.update(cert.X)
        trace.append(TraceEntry(cert, residual_hash(step.residual)))
        current = step.residual
    if not has_triangle(current):
        return TuzaWitness(frozenset(T), frozenset(Y), True, tuple(trace))
    if current.n <= exact_limit:
        nu = nu_exact(current)
        tau = tau_exact(current)
        ft = _relabel_triangles(current, nu.witness)
        fy = _relabel_edges(current, tau.witness)
        mode, certified = "exact", tau.value <= 2 * nu.value
    else:
        packing = greedy_packing(current)
        ft = _relabel_triangles(current, packing)
        fy = frozenset(e for t in ft for e in triangle_edges(t))
        mode, certified = "greedy", False
    return TuzaWitness(frozenset(T | ft), frozenset(Y | fy), certified, tuple(trace), mode, ft, fy)


def _check_packing_and_cover(g: Graph, T, Y) -> tuple[bool, str]:
    used: set[Edge] = set()
    for t in sorted(T):
        a, b, c = t
        if len({a, b, c}) != 3 or not all(0 <= x < g.n for x in t):
            return False, f"malformed triangle {t}"
        if not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
            return False, f"{t} is not a triangle of the graph"
        for e in triangle_edges(t):
            if e in used:
                return False, f"packing triangles share edge {e}"
            used.add(e)
    for u, v in sorted(Y):
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return False, f"cover edge {u}-{v} is not an edge of the graph"
    rest = g.without_edges(Y)
    tris = enumerate_triangles(rest)
    if tris:
        return False, f"G - Y still contains triangle {tris[0]}"
    return True, ""


def verify_witness(g: Graph, w: TuzaWitness) -> tuple[bool, str]:
    """Independent check of a witness, replaying its trace when present.

    Always checked: ``T`` is an edge-disjoint family of triangles of ``g``,
    ``Y`` is a set of edges of ``g`` and ``G - Y`` is triangle-free, and
    ``|Y| <= 2|T|`` when the witness claims to be certified.  The trace is
    replayed step by step: each certificate must pass the reducible-set
    checker on the current residual, residual digests must match, and ``T``
    and ``Y`` must be exactly the union of the steps plus the fallback part.
    """
    ok, reason = _check_packing_and_cover(g, w.T, w.Y)
    if not ok:
        return False, reason
    if w.certified and len(w.Y) > 2 * len(w.T):
        return False, f"certified but |Y| = {len(w.Y)} > 2|T| = {2 * len(w.T)}"
    if w.fallback not in (None, "exact", "greedy"):
        return False, f"unknown fallback {w.fallback!r}"
    if w.certified and w.fallback == "greedy":
        return False, "greedy fallback cannot be certified"
    current = g.with_identity_labels()
    T: set[Triangle] = set()
    Y: set[Edge] = set()
    for i, entry in enumerate(w.trace):
        c = entry.certificate
        try:
            local = c.relabel({lab: idx for idx, lab in enumerate(current.labels)})
        except KeyError as exc:
            return False, f"step {i}: certificate names a deleted vertex {exc}"
        ok, reason = verify_certificate(current, local)
        if not ok:
            return False, f"step {i}: {reason}"
        current = residual_graph(current, local)
        if residual_hash(current) != entry.residual_hash:
            return False, f"step {i}: residual digest mismatch"
        T.update(c.triangles)
        Y.update(c.X)
    if w.fallback is None:
        if w.fallback_T or w.fallback_Y:
            return False, "fallback data present without a fallback mode"
        if has_triangle(current):
            return False, "trace ends on a residual that still has triangles"
    else:
        if w.certified and len(w.fallback_Y) > 2 * len(w.fallback_T):
            return False, "fallback part breaks |Y| <= 2|T|"
        T |= w.fallback_T
        Y |= w.fallback_Y
    if T != set(w.T):
        return False, "T differs from the union of the trace triangles"
    if Y != set(w.Y):
        return False, "Y differs from the union of the trace edge sets"
    return True, ""


# -- discharging ----------------------------------------------------------------------

RULE_FULL = "2"
RULE_WEAK = "6"


@dataclass(frozen=True)
class Transfer:
    source: int
    target: int
    amount: Fraction
    reason: str


@dataclass(frozen=True)
class RedlemReport:
    """Which forbidden configurations occur, and where.

    ``violations`` maps a clause letter to the vertices (or vertex pairs)
    where it fails; clauses that hold are absent.
    """

    robust: bool
    robust_violation: Optional[tuple[int, frozenset[int]]]
    violations: dict[str, tuple]

    def holds(self, clause: str) -> bool:
        return clause not in self.violations

    @property
    def clean(self) -> bool:
        return self.robust and not self.violations


CLAUSES = "abcdefgh"


def _low_neighbours(g: Graph, v: int) -> list[int]:
    return [x for x in g.neighbors(v) if g.degree(x) <= 6]


def redlem_configuration_scan(g: Graph) -> RedlemReport:
    """Evaluate the eight forbidden-configuration clauses and robustness.

    a. each 6^- vertex: complement of G[N(v)] has max degree <= 1 and not exactly 2 edges
    b. 6^- vertices are pairwise non-adjacent
    c. no 7-vertex subsumes a 6-vertex
    d. no 7-vertex is adjacent to a thin 6-vertex
    e. no 8^- vertex subsumes a 5-vertex
    f. a 9-vertex subsumes at most three 6^- vertices, and if three then it
       has no other 6^- neighbour
    g. a 10^+ vertex subsuming a 6^- vertex has at most d(v) - 6 6^- neighbours
    h. a 7-, 8- or 9-vertex has at most d(v) - 4 6^- neighbours
    """
    deg = g.degrees()
    bad: dict[str, list] = {c: [] for c in CLAUSES}
    for v in range(g.n):
        d = deg[v]
        nb = g.rows[v]
        if d <= 6:
            if max_complement_degree(g, nb) > 1 or complement_edge_count(g, nb) == 2:
                bad["a"].append(v)
            continue
        low = _low_neighbours(g, v)
        low_sub = [x for x in low if subsumes(g, v, x)]
        if d == 7:
            bad["c"].extend((v, x) for x in low_sub if deg[x] == 6)
            bad["d"].extend((v, x) for x in low if is_thin(g, x))
        if d <= 8:
            bad["e"].extend((v, x) for x in low_sub if deg[x] == 5)
        if d == 9 and (len(low_sub) > 3 or (len(low_sub) == 3 and len(low) > 3)):
            bad["f"].append(v)
        if d >= 10 and low_sub and len(low) > d - 6:
            bad["g"].append(v)
        if 7 <= d <= 9 and len(low) > d - 4:
            bad["h"].append(v)
    for u, v in g.edges():
        if deg[u] <= 6 and deg[v] <= 6:
            bad["b"].append((u, v))
            # an 8^- vertex subsuming a 5-vertex includes low-degree subsumers
            for a, b in ((u, v), (v, u)):
                if deg[b] == 5 and subsumes(g, a, b):
                    bad["e"].append((a, b))
    violation = is_robust(g)
    return RedlemReport(
        violation is None,
        violation,
        {c: tuple(sorted(set(bad[c]))) for c in CLAUSES if bad[c]},
    )


@dataclass(frozen=True)
class ChargeReport:
    rule: str
    initial: dict[int, Fraction]
    final: dict[int, Fraction]
    transfers: tuple[Transfer, ...]
    configurations: RedlemReport

    @property
    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    @property
    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    @property
    def min_final(self) -> Optional[Fraction]:
        return min(self.final.values(), default=None)


def discharging_audit(g: Graph, rule: str = RULE_FULL) -> ChargeReport:
    """Apply a discharging rule literally, with exact rational charges.

    Rule "2": a 5-vertex takes 2/3 from each vertex subsuming it, a thin
    6-vertex takes 1/6 from each neighbour, and any other 6-vertex takes 1/4
    from each vertex subsuming it.  Rule "6": every 6^- vertex takes 1/4 from
    every neighbour.
    """
    if rule not in (RULE_FULL, RULE_WEAK):
        raise ValueError(f"unknown rule {rule!r}; expected '2' or '6'")
    deg = g.degrees()
    initial = {v: Fraction(deg[v]) for v in range(g.n)}
    transfers = []
    for v in range(g.n):
        if rule == RULE_WEAK:
            if deg[v] <= 6:
                transfers += [Transfer(u, v, Fraction(1, 4), "neighbor-6minus") for u in g.neighbors(v)]
            continue
        if deg[v] == 5:
            transfers += [
                Transfer(u, v, Fraction(2, 3), "subsumes-5") for u in g.neighbors(v) if subsumes(g, u, v)
            ]
        elif deg[v] == 6 and is_thin(g, v):
            transfers += [Transfer(u, v, Fraction(1, 6), "thin-6") for u in g.neighbors(v)]
        elif deg[v] == 6:
            transfers += [
                Transfer(u, v, Fraction(1, 4), "subsumes-nonthin-6")
                for u in g.neighbors(v)
                if subsumes(g, u, v)
            ]
    final = dict(initial)
    for t in transfers:
        final[t.source] -= t.amount
        final[t.target] += t.amount
    return ChargeReport(rule, initial, final, tuple(transfers), redlem_configuration_scan(g))
