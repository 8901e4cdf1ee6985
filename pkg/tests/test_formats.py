import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import from_nx, nx_of, random_graph
from tuza.certificates import find_reducible
from tuza.engine import discharging_audit, solve, verify_witness
from tuza.formats import (
    ParseError,
    certificate_from_json,
    certificate_to_json,
    charge_report_to_json,
    emit_edgelist,
    emit_graph6,
    iter_graph6,
    parse_edgelist,
    parse_graph6,
    witness_from_json,
    witness_to_json,
)
from tuza.graph import Graph, complete_graph, cycle_graph


@pytest.mark.parametrize(
    "text, g",
    [("Bw", complete_graph(3)), ("C~", complete_graph(4)), ("Dhc", cycle_graph(5)), ("D??", Graph(5, [])), ("@", Graph(1, [])), ("?", Graph(0, []))],
)
def test_fixtures(text, g):
    assert emit_graph6(g) == text
    assert parse_graph6(text).edges() == g.edges()
    assert parse_graph6(">>graph6<<" + text + "\n").edges() == g.edges()


def test_large_sizes_match_networkx():
    rng = random.Random(1)
    for n in (62, 63, 100):
        g = random_graph(rng, n, 0.1)
        text = emit_graph6(g)
        assert text == nx.to_graph6_bytes(nx_of(g), header=False).decode().strip()
        assert parse_graph6(text).edges() == g.edges()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 20).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))))))
def test_round_trip(data):
    n, pairs = data
    g = Graph(n, [(u, v) for u, v in pairs if u != v])
    assert parse_graph6(emit_graph6(g)).edges() == g.edges()


@pytest.mark.parametrize(
    "text, fragment, offset",
    [
        ("", "empty", 0),
        ("C\x7f", "outside", 1),
        ("C ", "outside", 1),
        ("C", "truncated adjacency", 1),
        ("C~~", "trailing", 2),
        ("~?", "truncated size", 2),
        ("Bx", "padding", 1),
    ],
)
def test_errors_carry_offsets(text, fragment, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert fragment in str(info.value)
    assert info.value.offset == offset


def test_non_ascii():
    with pytest.raises(ParseError):
        parse_graph6("Cé")


def test_stream_reports_line_numbers():
    lines = ["Bw", "", "C~", "Cx~"]
    with pytest.raises(ParseError) as info:
        list(iter_graph6(lines))
    assert info.value.line == 4
    assert [n for n, _ in iter_graph6(lines[:3])] == [1, 3]


def test_edgelist():
    text = "# a triangle\n3 3\n0 1\n1 2  # inline\n0 2\n"
    g = parse_edgelist(text)
    assert g.edges() == complete_graph(3).edges()
    assert parse_edgelist(emit_edgelist(g)).edges() == g.edges()


@pytest.mark.parametrize(
    "text, line",
    [("3\n", 1), ("3 2\n0 1\n", 1), ("3 1\n0 3\n", 2), ("3 1\n1 1\n", 2), ("3 1\n0 x\n", 2), ("-1 0\n", 1)],
)
def test_edgelist_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_edgelist(text)
    assert info.value.line == line


def test_witness_json_round_trip():
    for g in (complete_graph(4), complete_graph(6), complete_graph(8), complete_graph(10)):
        w = solve(g)
        data = json.loads(json.dumps(witness_to_json(w)))
        back = witness_from_json(data)
        assert back == w
        assert verify_witness(g, back)[0]
        assert ("warning" in data) == (not w.certified)


def test_witness_json_rejects_bad_schema():
    data = witness_to_json(solve(complete_graph(4)))
    with pytest.raises(ParseError):
        witness_from_json({**data, "schema": "9"})
    with pytest.raises(ParseError):
        witness_from_json({k: v for k, v in data.items() if k != "T"})


def test_certificate_json_round_trip():
    c = find_reducible(complete_graph(5)).certificate
    assert certificate_from_json(certificate_to_json(c)) == c
    with pytest.raises(ParseError):
        certificate_from_json({**certificate_to_json(c), "kind": "face"})


def test_charge_report_uses_exact_fractions():
    data = charge_report_to_json(discharging_audit(complete_graph(6)))
    assert data["final"]["0"] == "5/1" and data["total_final"] == "30/1"
    assert data["transfers"][0]["amount"] == "2/3"
