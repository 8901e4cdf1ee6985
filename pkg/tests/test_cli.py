import json

import pytest

from tuza.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_plain_and_json(capsys):
    code, out, _ = run(capsys, "solve", "C~")
    assert code == 0 and "|T|=1" in out and "|Y|=2" in out and "certified" in out
    code, out, _ = run(capsys, "solve", "C~", "--json")
    data = json.loads(out)
    assert data["certified"] and data["sizes"] == {"T": 1, "Y": 2}


def test_solve_stream_and_edgelist(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text(">>graph6<<Bw\nC~\n\nDhc\n")
    code, out, _ = run(capsys, "solve", str(f))
    assert code == 0 and len(out.strip().splitlines()) == 3
    e = tmp_path / "g.txt"
    e.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = run(capsys, "solve", str(e))
    assert code == 0 and out.startswith("C~")


def test_verify_round_trip_and_rejection(tmp_path, capsys):
    _, out, _ = run(capsys, "solve", "C~", "--json")
    good = tmp_path / "w.json"
    good.write_text(out)
    code, out, _ = run(capsys, "verify", "C~", str(good))
    assert code == 0 and json.loads(out)["valid"]
    data = json.loads(good.read_text())
    data["Y"] = data["Y"][:1]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "C~", str(bad))
    assert code == 1 and not json.loads(out)["valid"]
    bad.write_text("{not json")
    assert run(capsys, "verify", "C~", str(bad))[0] == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "C~")
    data = json.loads(out)
    assert code == 0 and (data["nu"], data["tau"], data["tuza"]) == (1, 2, True)
    assert run(capsys, "oracle", "C~", "--limit", "1")[0] == 3


def test_mad(capsys):
    code, out, _ = run(capsys, "mad", "C~")
    assert code == 0 and out.splitlines()[0] == "3/1"
    code, out, _ = run(capsys, "mad", "Dhc", "--brute-force")
    assert out.splitlines()[0] == "2/1"


def test_wke(capsys):
    data = json.loads(run(capsys, "wke", "Dhc")[1])
    assert data["wke"] and len(data["Q"]) <= len(data["M"])
    data = json.loads(run(capsys, "wke", "D~{")[1])  # K5
    assert not data["wke"]
    data = json.loads(run(capsys, "wke", "Dhc", "--anchor", "0")[1])
    assert data["wke"] and data["anchor"] == 0
    assert 0 in data["Q"] or all(0 not in e for e in data["M"])
    assert run(capsys, "wke", "Dhc", "--anchor", "9")[0] == 2


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "C~")
    data = json.loads(out)
    assert code == 0 and len(data["certificate"]["X"]) <= 2 * len(data["certificate"]["triangles"])
    code, out, _ = run(capsys, "reduce", "Dhc")
    assert code == 0


def test_audit(capsys):
    data = json.loads(run(capsys, "audit", "E~~w")[1])  # K6
    assert data["total_final"] == "30/1" and data["min_final"] == "5/1"
    data = json.loads(run(capsys, "audit", "E~~w", "--rule", "6")[1])
    assert data["rule"] == "6" and data["total_final"] == "30/1"


def test_scan(tmp_path, capsys):
    f = tmp_path / "s.g6"
    f.write_text("Bw\nC~\nDhc\nE~~w\n")
    code, out, _ = run(capsys, "scan", str(f), "--prune", "a,b", "--verify-pruned")
    data = json.loads(out)
    assert code == 0 and data["total"] == 4 and not data["failures"] and not data["unproven_prunes"]
    assert run(capsys, "scan", str(f), "--prune", "z")[0] == 2


@pytest.mark.parametrize("argv", [["solve", "C~~"], ["mad", "/no/such/dir/"], ["solve", "Cé"]])
def test_parse_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error")
