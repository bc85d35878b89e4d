from __future__ import annotations

import io
import json

import pytest

from intervalspectra.cli import main
from intervalspectra.formats import emit_edge_list
from intervalspectra.generators import cycle


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_check_triangle():
    code, text = run("check", "cycle(3)", "1 2 3")
    rep = json.loads(text)
    assert code == 0
    assert rep["v_int_size"] == 2 and rep["bound"] == 2 and rep["all_ok"]


def test_check_table():
    code, text = run("check", "cycle(4)", "1 2 3 4", "--format", "table")
    assert code == 0 and "bound" in text and "P1:" in text


def test_check_irregular_is_input_error(capsys):
    code, _ = run("check", "complete_bipartite(2,3)", "1 2 3 4 5 6")
    assert code == 1
    assert "regular" in capsys.readouterr().err


def test_check_reports_violation_with_exit_two(monkeypatch):
    import intervalspectra.bounds as bounds

    monkeypatch.setattr(bounds, "interval_vertices", lambda g, phi: (0, 1, 2))
    code, text = run("check", "complete(4)", "1 2 3 4 5 6")
    assert code == 2 and json.loads(text)["all_ok"] is False


def test_vint_rejects_repeated_label(capsys):
    code, text = run("vint", "cycle(3)", "1 1 2")
    assert code == 1 and text == ""
    assert "repeated" in capsys.readouterr().err


def test_vint_from_files(tmp_path):
    gfile = tmp_path / "c4.txt"
    gfile.write_text(emit_edge_list(cycle(4)))
    lfile = tmp_path / "phi.txt"
    lfile.write_text("1 2 3 4\n")
    code, text = run("vint", str(gfile), str(lfile))
    assert code == 0
    assert json.loads(text) == {"labels": [1, 2, 3, 4], "v_int": [1, 2, 3], "v_int_size": 3}


def test_bad_graph_file_line_number(tmp_path, capsys):
    gfile = tmp_path / "bad.txt"
    gfile.write_text("3 2\n0 1\n1 1\n")
    code, _ = run("vint", str(gfile), "1 2")
    assert code == 1
    assert "bad.txt:3: loop" in capsys.readouterr().err


def test_gen_round_trip(tmp_path):
    code, text = run("gen", "petersen")
    assert code == 0 and text.splitlines()[0] == "10 15"
    target = tmp_path / "p.txt"
    assert run("gen", "prism(4)", "-o", str(target))[0] == 0
    assert target.read_text().splitlines()[0] == "8 12"


def test_maximize_k4():
    code, text = run("maximize", "complete(4)", "--mode", "exhaustive")
    out = json.loads(text)
    assert code == 0 and out["best_size"] == 2 and out["exhaustive"] is True


def test_maximize_threads_and_flags():
    code, text = run("maximize", "cycle(6)", "--threads", "2", "--no-symmetry", "--no-prune")
    assert code == 0 and json.loads(text)["best_size"] == 5


def test_maximize_anneal_deterministic():
    a = run("maximize", "petersen", "--mode", "anneal", "--seed", "42", "--moves", "3000")
    b = run("maximize", "petersen", "--mode", "anneal", "--seed", "42", "--moves", "3000")
    assert a == b and a[0] == 0


def test_maximize_too_large(capsys):
    code, _ = run("maximize", "petersen")
    assert code == 1 and "too many" in capsys.readouterr().err


def test_sweep_json_lines():
    code, text = run("sweep", "--family", "cycle(3..6)")
    rows = [json.loads(line) for line in text.splitlines()]
    assert code == 0
    assert [r["outcome"]["best_size"] for r in rows] == [2, 3, 4, 5]


def test_sweep_row_error_sets_exit_code():
    code, text = run("sweep", "--family", "circulant(8..9,[1,4])")
    rows = [json.loads(line) for line in text.splitlines()]
    assert code == 1
    assert "outcome" in rows[0] and "error" in rows[1]


def test_fuzz():
    code, text = run("fuzz", "random_regular(10,3,1)", "--trials", "300", "--seed", "5")
    summary = json.loads(text.splitlines()[-1])
    assert code == 0
    assert summary["passed"] == 300 and summary["theorem_violations"] == 0
    assert summary["theorem_checked"] is True


@pytest.mark.parametrize("argv", [["maximize", "cycle(5)", "--bogus"], ["nonsense"], []])
def test_usage_errors_exit_one(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1


def test_unknown_family(capsys):
    code, _ = run("gen", "hypercube(3)")
    assert code == 1 and "unknown graph family" in capsys.readouterr().err
