import csv
import json
import subprocess
import sys

import pytest

from primefig.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_diagram_ascii(capsys):
    assert run(capsys, "diagram", "9", "--format", "ascii")[:2] == (0, "##\n##\n")
    assert run(capsys, "diagram", "10")[:2] == (0, "#\n###\n")


def test_diagram_json(capsys):
    assert run(capsys, "diagram", "1", "--format", "json")[:2] == (0, '{"n":1,"rows":[]}\n')


def test_diagram_svg_and_tikz(capsys):
    code, out, _ = run(capsys, "diagram", "12", "--format", "svg")
    assert code == 0 and out.count("<rect") == 4
    code, out, _ = run(capsys, "diagram", "12", "--format", "tikz", "--cell-size", "5")
    assert code == 0 and "[scale=0.1]" in out


@pytest.mark.parametrize("argv", [["diagram", "0"], ["diagram", "abc"], ["diagram", "-3"],
                                  ["diagram", "4", "--cell-size", "0"]])
def test_diagram_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


@pytest.mark.parametrize("arg, n", [("3,1", "10"), ("2,2", "9"), ("1,3", "10"), ("", "1")])
def test_number(capsys, arg, n):
    argv = ["number", arg] if arg else ["number"]
    assert run(capsys, *argv)[:2] == (0, n + "\n")


def test_number_errors(capsys):
    assert run(capsys, "number", "0,1")[0] == 2
    assert run(capsys, "number", "a,1")[0] == 2
    assert run(capsys, "number", ",".join(["1"] * 128))[0] == 3
    code, out, _ = run(capsys, "number", ",".join(["1"] * 128), "--max-bits", "0")
    assert code == 0 and int(out) == 2 ** 128


def test_factor_and_pi(capsys):
    assert run(capsys, "factor", "10")[:2] == (0, "p1 p3\n")
    assert run(capsys, "factor", "1")[:2] == (0, "-\n")
    assert run(capsys, "pi", "100")[:2] == (0, "25\n")
    assert run(capsys, "pi", "10.5")[:2] == (0, "4\n")
    assert run(capsys, "pi", "-1")[0] == 2


def test_count_subfigures(capsys):
    assert run(capsys, "count-subfigures", "8", "8")[:2] == (0, "12870\n")
    assert run(capsys, "count-subfigures", "0", "5")[:2] == (0, "1\n")


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "10")
    report = json.loads(out)
    assert code == 0
    assert report["bound_value"] == 1.5 and report["w"] == 4 and report["bound_ok"] is True
    code, out, _ = run(capsys, "bound", "2")
    report = json.loads(out)
    assert report["bound_value"] == 1.0 and report["w"] == 1
    assert run(capsys, "bound", "1.5")[0] == 2
    assert run(capsys, "bound", "x")[0] == 2


def test_table_one_and_sixteen(capsys):
    code, out, _ = run(capsys, "table", "1")
    assert code == 0 and out == "1  -\n   (empty)\n"
    code, out, _ = run(capsys, "table", "16")
    block = out.split("\n\n")[-1]
    assert block == "16  p1^4\n    #\n    #\n    #\n    #\n"
    assert run(capsys, "table", "0")[0] == 2


def test_verify_commands(capsys):
    code, out, err = run(capsys, "verify", "lemma1", "--max", "100")
    report = json.loads(out)
    assert code == 0 and report["cases_checked"] == 10 ** 4 and report["counterexamples"] == []
    assert "lemma1" in err
    code, out, _ = run(capsys, "verify", "lemma2", "--imax", "4", "--jmax", "4")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run(capsys, "verify", "theorem", "--xmax", "1000")
    assert code == 0 and json.loads(out)["cases_checked"] == 999


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "lemma1", "--max", "0")[0] == 2
    assert run(capsys, "verify", "theorem", "--xmax", "1")[0] == 2
    assert run(capsys, "verify", "lemma3")[0] == 2


def test_verify_counterexample_exit_code(capsys, monkeypatch):
    from primefig import bounds

    monkeypatch.setattr(bounds._kernels, "subfigure_violations", lambda *a: [(2, 1)])
    code, out, _ = run(capsys, "verify", "lemma1", "--max", "5")
    assert code == 1 and json.loads(out)["ok"] is False


def test_verify_theorem_csv(capsys, tmp_path):
    path = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "verify", "theorem", "--xmax", "64", "--csv", str(path))
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 63
    assert rows[8] == {"x": "10", "h": "3", "w": "4", "m_size": "10", "binom": "35", "power": "256",
                       "bound_value": "1.5", "bound_ok": "true", "chain_ok": "true"}


def test_output_flag(capsys, tmp_path):
    path = tmp_path / "out.txt"
    code, out, _ = run(capsys, "-o", str(path), "diagram", "9")
    assert code == 0 and out == "" and path.read_text() == "##\n##\n"


def test_module_entry_point_keeps_stdout_clean():
    proc = subprocess.run([sys.executable, "-m", "primefig", "verify", "lemma2", "--imax", "3", "--jmax", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    json.loads(proc.stdout)
    assert "counterexamples" in proc.stderr
