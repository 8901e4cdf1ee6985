"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 oracle refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterator, Optional

from .certificates import find_reducible
from .engine import discharging_audit, solve, verify_witness
from .formats import (
    ParseError,
    certificate_to_json,
    charge_report_to_json,
    emit_graph6,
    iter_graph6,
    looks_like_edgelist,
    parse_edgelist,
    witness_from_json,
    witness_to_json,
    wke_to_json,
)
from .graph import Graph, blocks, components
from .oracles import OracleRefusal, check_tuza
from .scan import parse_prune, scan
from .sparsity import mad, mad_bruteforce
from .wke import anchored_wke, find_anchored_wke_bruteforce, find_wke, BRUTE_FORCE_LIMIT

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_REFUSAL = 0, 1, 2, 3


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="ascii", errors="strict")
    # anything else is taken as a literal graph6 record
    return source


def read_graphs(source: str, fmt: str = "auto") -> Iterator[tuple[int, Graph]]:
    """``(line, graph)`` pairs from a file, ``-`` (stdin) or a literal graph6 string."""
    try:
        text = _read_source(source)
    except UnicodeDecodeError as exc:
        raise ParseError("input is not ASCII", exc.start) from None
    if fmt == "edgelist" or (fmt == "auto" and looks_like_edgelist(text)):
        yield 1, parse_edgelist(text)
        return
    yield from iter_graph6(text.splitlines())


def _single_graph(source: str, fmt: str) -> Graph:
    graphs = list(read_graphs(source, fmt))
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0][1]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def cmd_solve(args) -> int:
    for line, g in read_graphs(args.graph, args.format):
        w = solve(g)
        if args.json:
            out = witness_to_json(w)
            out["line"] = line
            out["graph6"] = emit_graph6(g)
            _emit(out)
        else:
            flag = "certified" if w.certified else "UNCERTIFIED"
            extra = f" fallback={w.fallback}" if w.fallback else ""
            print(f"{emit_graph6(g)}\t|T|={len(w.T)}\t|Y|={len(w.Y)}\t{flag}\tsteps={len(w.trace)}{extra}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _single_graph(args.graph, args.format)
    try:
        data = json.loads(Path(args.witness).read_text() if args.witness != "-" else sys.stdin.read())
    except json.JSONDecodeError as exc:
        raise ParseError(f"witness is not valid JSON: {exc.msg}", exc.pos) from None
    w = witness_from_json(data)
    ok, reason = verify_witness(g, w)
    _emit({"valid": ok, "reason": reason or None, "certified": w.certified})
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_oracle(args) -> int:
    for line, g in read_graphs(args.graph, args.format):
        ok, nu, tau = check_tuza(g, args.limit)
        _emit(
            {
                "line": line,
                "nu": nu.value,
                "tau": tau.value,
                "tuza": ok,
                "packing": [list(t) for t in sorted(nu.witness)],
                "cover": [list(e) for e in sorted(tau.witness)],
                "explored": {"nu": nu.explored, "tau": tau.explored},
            }
        )
    return EXIT_OK


def cmd_mad(args) -> int:
    for _, g in read_graphs(args.graph, args.format):
        d = mad_bruteforce(g) if args.brute_force else mad(g)
        print(str(d))
        print("witness: " + " ".join(map(str, sorted(d.witness))))
    return EXIT_OK


def cmd_wke(args) -> int:
    for _, g in read_graphs(args.graph, args.format):
        if args.anchor is None:
            w = find_wke(g)
        else:
            if not 0 <= args.anchor < g.n:
                raise ParseError(f"anchor {args.anchor} is not a vertex")
            w = None
            found, _ = blocks(g)
            nontrivial = [c for c in components(g) if c.bit_count() > 1]
            if len(found) == 1 and len(nontrivial) == 1 and args.anchor in found[0]:
                keep = sorted(found[0])
                sub = g.induced(keep).with_identity_labels()
                w = anchored_wke(sub, keep.index(args.anchor))
                if w is not None:
                    w = type(w)(
                        frozenset(tuple(sorted((keep[a], keep[b]))) for a, b in w.matching),
                        frozenset(keep[x] for x in w.cover),
                        w.method,
                        args.anchor,
                    )
            if w is None and g.n <= BRUTE_FORCE_LIMIT:
                w = find_anchored_wke_bruteforce(g, args.anchor)
        _emit(wke_to_json(w))
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _single_graph(args.graph, args.format)
    step = find_reducible(g)
    if step is None:
        _emit({"schema": "1", "certificate": None})
        return EXIT_VERIFY
    _emit(
        {
            "schema": "1",
            "certificate": certificate_to_json(step.certificate),
            "residual": {
                "labels": list(step.residual.labels),
                "edges": [[step.residual.labels[u], step.residual.labels[v]] for u, v in step.residual.edges()],
            },
        }
    )
    return EXIT_OK


def cmd_audit(args) -> int:
    for _, g in read_graphs(args.graph, args.format):
        _emit(charge_report_to_json(discharging_audit(g, args.rule)))
    return EXIT_OK


def cmd_scan(args) -> int:
    prune = parse_prune(args.prune)
    report = scan(read_graphs(args.stream, "graph6"), prune, args.verify_pruned)
    _emit(report.to_json())
    if report.failures or report.unproven_prunes:
        return EXIT_VERIFY
    if report.refusals:
        return EXIT_REFUSAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tuza", description="Certified triangle packing and covering for sparse graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_arg(sp, name="graph"):
        sp.add_argument(name, help="file, '-' for stdin, or a literal graph6 string")
        sp.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")

    sp = sub.add_parser("solve", help="packing T and cover Y with |Y| <= 2|T|")
    graph_arg(sp)
    sp.add_argument("--json", action="store_true", help="full JSON witness including the trace")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="check a witness JSON against a graph")
    graph_arg(sp)
    sp.add_argument("witness", help="witness JSON file or '-'")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="exact nu and tau")
    graph_arg(sp)
    sp.add_argument("--limit", type=int, default=200, help="refuse above this many triangles")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("mad", help="exact maximum average degree")
    graph_arg(sp)
    sp.add_argument("--brute-force", action="store_true")
    sp.set_defaults(func=cmd_mad)

    sp = sub.add_parser("wke", help="weak Koenig-Egervary witness")
    graph_arg(sp)
    sp.add_argument("--anchor", type=int, default=None)
    sp.set_defaults(func=cmd_wke)

    sp = sub.add_parser("reduce", help="one reducible-set certificate")
    graph_arg(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("audit", help="discharging charges and configuration report")
    graph_arg(sp)
    sp.add_argument("--rule", choices=("2", "6"), default="2")
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("scan", help="prune-and-verify over a graph6 stream")
    sp.add_argument("stream", help="graph6 file or '-'")
    sp.add_argument("--prune", default="a,b", help="comma list of clauses a-h and 'robust', or 'all'/'none'")
    sp.add_argument("--verify-pruned", action="store_true")
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
