"""graph6 and edge-list codecs, and the JSON schema for results."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterator, Optional, Union

from .certificates import EDGE, VERTEX, Certificate
from .graph import Graph, triangle
from .wke import WkeWitness

SCHEMA_VERSION = "1"
HEADER = b">>graph6<<"


class ParseError(ValueError):
    """Malformed input; ``offset`` is a byte offset or a 1-based line number."""

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


# -- graph6 ---------------------------------------------------------------------

def _as_bytes(data: Union[str, bytes]) -> bytes:
    if isinstance(data, str):
        try:
            return data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII character", exc.start) from None
    return bytes(data)


def parse_graph6(line: Union[str, bytes]) -> Graph:
    """Decode one graph6 record (trailing newline and ``>>graph6<<`` header allowed)."""
    data = _as_bytes(line).rstrip(b"\r\n")
    start = len(HEADER) if data.startswith(HEADER) else 0
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise ParseError(f"byte {data[i]!r} outside 63..126", i)
    pos = start
    if pos >= len(data):
        raise ParseError("empty record", pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    else:
        wide = pos + 1 < len(data) and data[pos + 1] == 126
        width = 6 if wide else 3
        pos += 2 if wide else 1
        if pos + width > len(data):
            raise ParseError("truncated size field", len(data))
        n = 0
        for b in data[pos:pos + width]:
            n = (n << 6) | (b - 63)
        pos += width
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise ParseError(f"truncated adjacency data: need {need} bytes, got {len(body)}", len(data))
    if len(body) > need:
        raise ParseError("trailing characters after adjacency data", pos + need)
    value = 0
    for b in body:
        value = (value << 6) | (b - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", pos + need - 1)
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """graph6 record for ``g`` in its own vertex order, without newline."""
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    out = bytearray(head)
    acc = nacc = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return out.decode("ascii")


def iter_graph6(lines) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line of a stream."""
    for number, raw in enumerate(lines, 1):
        text = _as_bytes(raw).strip()
        if not text:
            continue
        try:
            yield number, parse_graph6(text)
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (", 1)[0], exc.offset, number) from None


# -- edge lists -----------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """``n m`` on the first line, then ``m`` lines ``u v`` (0-based); ``#`` starts a comment."""
    rows = []
    for number, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            rows.append((number, body))
    if not rows:
        raise ParseError("empty edge list")
    number, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise ParseError("header must be 'n m'", line=number) from None
    if n < 0 or m < 0:
        raise ParseError("negative size in header", line=number)
    if len(rows) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(rows) - 1}", line=number)
    edges = []
    for number, body in rows[1:]:
        try:
            u, v = (int(x) for x in body)
        except ValueError:
            raise ParseError("edge line must be 'u v'", line=number) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"invalid edge {u} {v}", line=number)
        edges.append((u, v))
    return Graph(n, edges)


def emit_edgelist(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def looks_like_edgelist(text: str) -> bool:
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].split()
        if body:
            return len(body) == 2 and all(tok.isdigit() for tok in body)
    return False


# -- JSON --------------------------------------------------------------------------

def _edges(es) -> list[list[int]]:
    return [list(e) for e in sorted(tuple(sorted(e)) for e in es)]


def _tris(ts) -> list[list[int]]:
    return [list(t) for t in sorted(triangle(*t) for t in ts)]


def certificate_to_json(c: Certificate) -> dict[str, Any]:
    target = sorted(c.target) if c.kind == VERTEX else _edges(c.target)
    return {
        "kind": c.kind,
        "target": target,
        "triangles": _tris(c.triangles),
        "X": _edges(c.X),
        "provenance": c.provenance,
    }


def certificate_from_json(d: dict[str, Any]) -> Certificate:
    try:
        kind = d["kind"]
        if kind == VERTEX:
            target = frozenset(int(v) for v in d["target"])
        elif kind == EDGE:
            target = frozenset(tuple(sorted((int(u), int(v)))) for u, v in d["target"])
        else:
            raise ParseError(f"unknown certificate kind {kind!r}")
        tris = tuple(sorted(triangle(*map(int, t)) for t in d["triangles"]))
        xs = frozenset(tuple(sorted((int(u), int(v)))) for u, v in d["X"])
        return Certificate(kind, target, tris, xs, str(d.get("provenance", "")))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed certificate: {exc!r}") from None


def witness_to_json(w) -> dict[str, Any]:
    out = {
        "schema": SCHEMA_VERSION,
        "certified": w.certified,
        "T": _tris(w.T),
        "Y": _edges(w.Y),
        "sizes": {"T": len(w.T), "Y": len(w.Y)},
        "fallback": w.fallback,
        "trace": [
            {"certificate": certificate_to_json(e.certificate), "residual_hash": e.residual_hash}
            for e in w.trace
        ],
    }
    if w.fallback is not None:
        out["fallback_T"] = _tris(w.fallback_T)
        out["fallback_Y"] = _edges(w.fallback_Y)
    if not w.certified:
        out["warning"] = "UNCERTIFIED: |Y| <= 2|T| is not guaranteed for this witness"
    return out


def witness_from_json(d: dict[str, Any]):
    from .engine import TraceEntry, TuzaWitness

    if str(d.get("schema")) != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema version {d.get('schema')!r}")
    try:
        trace = tuple(
            TraceEntry(certificate_from_json(e["certificate"]), str(e["residual_hash"]))
            for e in d.get("trace", [])
        )
        return TuzaWitness(
            T=frozenset(triangle(*map(int, t)) for t in d["T"]),
            Y=frozenset(tuple(sorted((int(u), int(v)))) for u, v in d["Y"]),
            certified=bool(d["certified"]),
            trace=trace,
            fallback=d.get("fallback"),
            fallback_T=frozenset(triangle(*map(int, t)) for t in d.get("fallback_T", [])),
            fallback_Y=frozenset(tuple(sorted((int(u), int(v)))) for u, v in d.get("fallback_Y", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed witness: {exc!r}") from None


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def wke_to_json(w: Optional[WkeWitness]) -> dict[str, Any]:
    if w is None:
        return {"schema": SCHEMA_VERSION, "wke": False, "method": None}
    out = {
        "schema": SCHEMA_VERSION,
        "wke": True,
        "method": w.method,
        "M": _edges(w.matching),
        "Q": sorted(w.cover),
    }
    anchor = getattr(w, "anchor", None)
    if anchor is not None and anchor >= 0:
        out["anchor"] = anchor
    return out


def charge_report_to_json(r) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "rule": r.rule,
        "initial": {str(v): fraction_str(c) for v, c in sorted(r.initial.items())},
        "final": {str(v): fraction_str(c) for v, c in sorted(r.final.items())},
        "total_initial": fraction_str(r.total_initial),
        "total_final": fraction_str(r.total_final),
        "min_final": None if r.min_final is None else fraction_str(r.min_final),
        "transfers": [
            {"from": t.source, "to": t.target, "amount": fraction_str(t.amount), "reason": t.reason}
            for t in r.transfers
        ],
        "configurations": redlem_to_json(r.configurations),
    }


def redlem_to_json(rep) -> dict[str, Any]:
    return {
        "robust": rep.robust,
        "robust_violation": None
        if rep.robust_violation is None
        else {"vertex": rep.robust_violation[0], "component": sorted(rep.robust_violation[1])},
        "violations": {k: [list(x) if isinstance(x, tuple) else x for x in v] for k, v in rep.violations.items()},
        "clean": rep.clean,
    }
