"""Prune-and-verify scan over a stream of graphs.

Graphs showing a selected forbidden configuration are pruned (optionally
after confirming that a reducible set really exists); the rest go to the
exact oracles and are checked against the bound tau <= 2 nu.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .certificates import find_reducible
from .engine import CLAUSES, redlem_configuration_scan
from .formats import emit_graph6
from .graph import Graph
from .oracles import OracleRefusal, check_tuza

ROBUST = "robust"
CATEGORIES = (ROBUST,) + tuple(CLAUSES)


def parse_prune(text: str) -> tuple[str, ...]:
    """``"a,b"``, ``"all"``, ``"none"`` or any comma list of clause letters and ``robust``."""
    text = text.strip().lower()
    if text == "all":
        return CATEGORIES
    if text in ("", "none"):
        return ()
    picked = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in CATEGORIES:
            raise ValueError(f"unknown pruning category {tok!r}; choose from {', '.join(CATEGORIES)} or 'all'")
        if tok not in picked:
            picked.append(tok)
    # report in a fixed order regardless of how they were listed
    return tuple(c for c in CATEGORIES if c in picked)


@dataclass
class SurvivorStatus:
    index: int
    graph6: str
    nu: int
    tau: int
    tuza: bool
    witness_hash: str


@dataclass
class ScanReport:
    prune: tuple[str, ...]
    total: int = 0
    pruned: dict[str, int] = field(default_factory=dict)
    survivors: list[SurvivorStatus] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    unproven_prunes: list[dict] = field(default_factory=list)
    refusals: list[dict] = field(default_factory=list)
    verified_prunes: int = 0

    @property
    def pruned_total(self) -> int:
        return sum(self.pruned.values())

    def to_json(self) -> dict:
        return {
            "schema": "1",
            "prune": list(self.prune),
            "total": self.total,
            "pruned": {c: self.pruned.get(c, 0) for c in self.prune},
            "pruned_total": self.pruned_total,
            "verified_prunes": self.verified_prunes,
            "survivor_count": len(self.survivors),
            "survivors": [vars(s) for s in self.survivors],
            "failures": self.failures,
            "unproven_prunes": self.unproven_prunes,
            "refusals": self.refusals,
        }


def _pruning_reason(g: Graph, prune: tuple[str, ...]) -> Optional[str]:
    if not prune:
        return None
    rep = redlem_configuration_scan(g)
    for c in prune:
        if (c == ROBUST and not rep.robust) or (c != ROBUST and not rep.holds(c)):
            return c
    return None


def _witness_digest(nu, tau) -> str:
    text = f"{sorted(nu.witness)}|{sorted(tau.witness)}"
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def scan(graphs: Iterable[tuple[int, Graph]], prune: tuple[str, ...] = ("a", "b"), verify_pruned: bool = False) -> ScanReport:
    """Run the harness over ``(index, graph)`` pairs in order.

    A pruned graph counts under the first selected category it violates.
    With ``verify_pruned`` each pruned graph with a triangle must also yield
    a checked reducible-set certificate; misses land in ``unproven_prunes``.
    """
    report = ScanReport(prune)
    for index, g in graphs:
        report.total += 1
        reason = _pruning_reason(g, prune)
        if reason is not None:
            report.pruned[reason] = report.pruned.get(reason, 0) + 1
            if verify_pruned:
                if find_reducible(g) is None:
                    report.unproven_prunes.append({"index": index, "graph6": emit_graph6(g), "reason": reason})
                else:
                    report.verified_prunes += 1
            continue
        try:
            ok, nu, tau = check_tuza(g)
        except OracleRefusal as exc:
            report.refusals.append({"index": index, "graph6": emit_graph6(g), "reason": str(exc)})
            continue
        status = SurvivorStatus(index, emit_graph6(g), nu.value, tau.value, ok, _witness_digest(nu, tau))
        report.survivors.append(status)
        if not ok:
            report.failures.append({"index": index, "graph6": status.graph6, "nu": nu.value, "tau": tau.value})
    return report
