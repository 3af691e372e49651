"""End-to-end tests of the command line entry point."""

import json

import numpy as np
import pytest

from walksig.core.config import settings
from walksig.main import main
from walksig.services import fixtures


@pytest.fixture(autouse=True)
def no_cache(monkeypatch):
    monkeypatch.setattr(settings, "cache_dir", None)


def run(capsys, *argv):
    code = main([str(arg) for arg in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariant_output_is_stable(capsys, write_graphs, rook, shrikhande):
    path = write_graphs([rook, shrikhande])
    code, first, _ = run(capsys, "invariant", path)
    assert code == 0
    lines = first.splitlines()
    assert [line.split("\t")[0] for line in lines] == ["0", "1"]
    assert lines[0].split("\t")[1] != lines[1].split("\t")[1]
    _, second, _ = run(capsys, "invariant", path)
    assert first == second


def test_adjacency_invariant_matches_on_srg_pair(capsys, write_graphs, rook, shrikhande):
    path = write_graphs([rook, shrikhande])
    code, out, _ = run(capsys, "invariant", path, "--invariant", "adjacency", "--mode", "exact")
    assert code == 0
    first, second = (line.split("\t")[1] for line in out.splitlines())
    assert first == second
    assert first.startswith("16:exact:1,0,-48,")


def test_invariant_exact_k4(capsys, write_graphs, k4):
    path = write_graphs([k4], fmt="edge-list", name="k4.txt")
    code, out, _ = run(capsys, "invariant", path, "--invariant", "adjacency", "--mode", "exact")
    assert code == 0
    assert out == "0\t4:exact:1,0,-6,-8,-3\n"


def test_invariant_reports_failing_graphs(capsys, write_graphs, c5, petersen):
    path = write_graphs([c5, petersen])
    code, out, err = run(capsys, "invariant", path)
    assert code == 1
    assert out.startswith("1\t30:modular:")
    assert "graph 0:" in err


def test_invariant_dump(capsys, write_graphs, tmp_path, k4):
    path = write_graphs([k4])
    dumps = tmp_path / "dumps"
    code, _, _ = run(capsys, "invariant", path, "--dump", "u", "--dump-dir", dumps)
    assert code == 0
    lines = (dumps / "graph-0.u.txt").read_text().splitlines()
    assert len(lines) == 36
    assert "0 3 -1/3" in lines


def test_scan_json(capsys, write_graphs, rook, shrikhande):
    path = write_graphs([rook, shrikhande])
    code, out, _ = run(capsys, "scan", path)
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "holds"
    assert report["srg_params"] == "(16,6,2,2)"
    assert [group["members"] for group in report["groups"]] == [[0], [1]]
    assert "timings" not in report


def test_scan_tsv_to_file(capsys, write_graphs, tmp_path, petersen):
    relabeled = petersen.relabel(np.random.default_rng(4).permutation(10))
    path = write_graphs([petersen, relabeled])
    output = tmp_path / "report.tsv"
    code, out, _ = run(capsys, "scan", path, "--format", "tsv", "-o", output, "--streaming")
    assert code == 0
    assert out == ""
    text = output.read_text()
    assert "0,1\tisomorphic" in text
    assert "\ttrue\t30:modular:" in text


def test_iso_commands(capsys, write_graphs, petersen, rook, shrikhande):
    g = write_graphs([petersen], name="g.g6")
    h = write_graphs([petersen.relabel(list(range(9, -1, -1)))], name="h.g6")
    code, out, _ = run(capsys, "iso", g, h)
    assert code == 0
    verdict, witness = out.splitlines()
    assert verdict == "isomorphic"
    assert witness.startswith("witness: 0->")

    r = write_graphs([rook], name="rook.g6")
    s = write_graphs([shrikhande], name="shrikhande.g6")
    code, out, _ = run(capsys, "iso", r, s)
    assert (code, out) == (0, "non-isomorphic\n")
    code, out, _ = run(capsys, "iso", r, s, "--node-budget", "1")
    assert (code, out) == (3, "inconclusive\n")


def test_iso_needs_single_graphs(capsys, write_graphs, k4):
    pair = write_graphs([k4, k4])
    code, _, err = run(capsys, "iso", pair, pair)
    assert code == 2
    assert "expected one" in err


def test_convert_round_trip(capsys, write_graphs, tmp_path):
    graphs = [fixtures.builtin(name) for name in ("petersen", "c4-plus-point", "clebsch")]
    source = write_graphs(graphs)
    edges = tmp_path / "family.txt"
    back = tmp_path / "back.g6"
    assert run(capsys, "convert", source, "--to", "edge-list", "-o", edges)[0] == 0
    assert edges.read_text().startswith("10\n0 1\n")
    assert run(capsys, "convert", edges, "--to", "graph6", "-o", back)[0] == 0
    assert back.read_text() == source.read_text()


def test_convert_complement(capsys, write_graphs, rook):
    path = write_graphs([rook])
    code, out, _ = run(capsys, "convert", path, "--to", "graph6", "--complement")
    assert code == 0
    expected = write_graphs([fixtures.builtin("rook-4x4-complement")], name="c.g6")
    assert out == expected.read_text()


def test_verify_on_file(capsys, write_graphs, k4, petersen):
    path = write_graphs([k4, petersen])
    code, out, _ = run(capsys, "verify", path, "--no-random")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks, 0 failed")
    assert "FAIL" not in out


def test_verify_json_reports_failures(capsys, write_graphs, c5):
    path = write_graphs([c5])
    code, out, _ = run(capsys, "verify", path, "--format", "json")
    assert code == 1
    ledger = json.loads(out)
    assert any(not check["passed"] for check in ledger["checks"])


def test_errors_exit_with_two(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("C\x7f\x7f\n", encoding="ascii")
    assert run(capsys, "invariant", bad)[0] == 2
    code, _, err = run(capsys, "scan", tmp_path / "missing.g6")
    assert code == 2
    assert err.startswith("error:")


def test_invalid_power_is_rejected(capsys, write_graphs, k4):
    path = write_graphs([k4])
    code, _, err = run(capsys, "invariant", path, "--invariant", "splus-u2", "--power", "3")
    assert code == 2
    assert "fixed power" in err


def test_verify_builtins(capsys):
    code, out, _ = run(capsys, "verify", "--no-random")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks, 0 failed")
    assert "FAIL" not in out


def test_scan_has_no_tolerance(capsys, write_graphs, petersen):
    path = write_graphs([petersen])
    with pytest.raises(SystemExit) as excinfo:
        main(["scan", str(path), "--tol", "1e-6"])
    assert excinfo.value.code == 2
