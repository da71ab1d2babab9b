import io
import json
import sys

import pytest

from conftest import FANO_TEXT
from symconf import census_from_formulas, format_compact, heawood_chain, parse_compact, parse_json
from symconf.cli import main, run


@pytest.fixture
def fano_file(tmp_path):
    path = tmp_path / "fano.txt"
    path.write_text(FANO_TEXT + "\n")
    return str(path)


def stdin_run(monkeypatch, text, argv):
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    return run(argv)


def test_census_fano(fano_file):
    out = run(["census", fano_file])
    assert out.code == 0
    assert "v = 7, t = 28" in out.stdout
    assert "match: yes" in out.stdout


def test_census_json(fano_file):
    doc = json.loads(run(["census", fano_file, "--json"]).stdout)
    assert doc["t"] == 28 and doc["match"] is True
    assert doc["formula"] == census_from_formulas(7, 28).as_dict() == doc["direct"]


def test_verify(fano_file):
    out = run(["verify", fano_file])
    assert out.code == 0
    assert "valid: yes" in out.stdout and "levi girth: 6" in out.stdout


def test_verify_invalid(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("012 013 024 135 146 236 245")
    out = run(["verify", str(bad)])
    assert out.code == 1 and out.stdout == ""


def test_parse_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("01 234")
    assert run(["verify", str(bad)]).code == 2
    bad.write_text("{not json")
    assert run(["verify", str(bad)]).code == 2
    assert run(["verify", str(tmp_path / "missing.txt")]).code == 2


def test_stdin(monkeypatch):
    out = stdin_run(monkeypatch, FANO_TEXT, ["census", "-"])
    assert out.code == 0 and "t = 28" in out.stdout


def test_json_input_autodetect(monkeypatch):
    text = json.dumps(parse_compact(FANO_TEXT).to_json())
    out = stdin_run(monkeypatch, "  " + text, ["verify", "-"])
    assert out.code == 0 and "triangles: 28" in out.stdout
    forced = stdin_run(monkeypatch, FANO_TEXT, ["verify", "-", "--format", "json"])
    assert forced.code == 2


def test_triangle_free_16():
    out = run(["triangle-free", "16"])
    assert out.code == 1 and out.stdout == ""
    assert "32" in out.stderr and len(out.stderr.strip().splitlines()) == 1


def test_triangle_free_trace_and_json():
    out = run(["triangle-free", "27", "--trace"])
    assert out.code == 0
    lines = out.stdout.splitlines()
    assert parse_compact(lines[0]).v == 27
    assert "base: 17" in lines and "steps: 2" in lines
    doc = json.loads(run(["triangle-free", "27", "--trace", "--json"]).stdout)
    assert parse_json(json.dumps(doc["configuration"])).v == 27
    assert doc["trace"]["base_v"] == 17


def test_chain(monkeypatch):
    out = run(["chain", "3"])
    assert out.code == 0
    assert parse_compact(out.stdout) == heawood_chain(3)
    doc = run(["chain", "3", "--json"]).stdout
    assert parse_json(doc) == heawood_chain(3)
    piped = stdin_run(monkeypatch, out.stdout, ["census", "-"])
    assert "t = 60" in piped.stdout and "match: yes" in piped.stdout
    assert run(["chain", "1"]).code == 1


def test_cyclic_listing():
    out = run(["cyclic", "12", "--json"])
    doc = json.loads(out.stdout)
    assert doc["v"] == 12
    assert all(r["predicted"] == r["direct"] for r in doc["triples"])
    assert {r["direct"] for r in doc["triples"]} <= {12, 16, 24}
    small = json.loads(run(["cyclic", "9", "--json"]).stdout)
    assert [r["predicted"] for r in small["triples"]] == [None, None, None]


def test_cyclic_single():
    out = run(["cyclic", "7", "1", "2", "4"])
    assert out.code == 0 and parse_compact(out.stdout).v == 7
    assert run(["cyclic", "10", "1", "4", "5"]).code == 1
    assert run(["cyclic", "10", "1", "4"]).code == 2


def test_enumerate_distribution():
    out = run(["enumerate", "10", "--distribution"])
    rows = [line.split() for line in out.stdout.splitlines()[1:]]
    assert [(int(t), int(n)) for _, t, n in rows] == [(17, 2), (18, 3), (19, 2), (20, 3)]


def test_enumerate_emit():
    out = run(["enumerate", "9", "--emit"])
    lines = out.stdout.splitlines()
    assert len(lines) == 3 and all(parse_compact(line).v == 9 for line in lines)


def test_enumerate_gates():
    out = run(["enumerate", "13"])
    assert out.code == 2 and "--long-run" in out.stderr
    assert run(["enumerate", "6"]).code == 1
    assert run(["enumerate", "9", "--connected-only", "maybe"]).code == 2
    assert run(["enumerate", "9", "--connected-only", "false"]).code == 0
    assert run(["enumerate", "9", "--threads", "0"]).code == 2


def test_levi(fano_file):
    out = run(["levi", fano_file])
    assert "vertices: 14" in out.stdout and "6-cycles: 28" in out.stdout
    dot = run(["levi", fano_file, "--export", "dot"]).stdout
    assert dot.startswith("graph levi {") and dot.count("--") == 21
    adj = run(["levi", fano_file, "--export", "adj"]).stdout.splitlines()
    assert len(adj) == 14 and adj[0].startswith("0: ")


def test_usage_errors():
    assert run([]).code == 2
    assert run(["frobnicate"]).code == 2
    assert run(["triangle-free", "x"]).code == 2
    help_out = run(["--help"])
    assert help_out.code == 0 and "enumerate" in help_out.stdout


def test_outputs_are_byte_stable(fano_file):
    for argv in (["census", fano_file, "--json"], ["triangle-free", "33"], ["cyclic", "20"]):
        assert run(argv) == run(argv)


def test_main_writes_streams(capsys):
    assert main(["triangle-free", "15"]) == 0
    cap = capsys.readouterr()
    assert parse_compact(cap.out).v == 15 and cap.err == ""
    assert main(["triangle-free", "16"]) == 1
    cap = capsys.readouterr()
    assert cap.out == "" and cap.err


def test_compact_too_large_for_alphabet():
    assert format_compact(heawood_chain(8))
    out = run(["chain", "9"])
    assert out.code == 1 and out.stdout == ""
    assert json.loads(run(["chain", "9", "--json"]).stdout)["v"] == 63
