import json
import subprocess
import sys

import pytest

from _reference import TWO_POINT
from chern_count.chern_ring import FormalPolynomial
from chern_count.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_formula_text(capsys):
    code, out, _ = run(capsys, "formula", "--sing", "D5")
    assert code == 0
    assert out == "84 c1^2 + 132 c1 x1 + 44 x1^2 + 20 x2\n"


def test_two_point_formula_in_table_layout(capsys):
    _, out, _ = run(capsys, "formula", "--sing", "A1A1")
    assert out.strip() == (
        "-42 c1^2 + 9 c1^4 - 39 c1 x1 + 12 c1^3 x1 - 6 x1^2 + 4 c1^2 x1^2"
        " - 7 x2 + 6 c1^2 x2 + 4 c1 x1 x2 + x2^2"
    )


def test_formula_latex(capsys):
    _, out, _ = run(capsys, "formula", "--sing", "A1D4", "--format", "latex")
    assert out.startswith("-420 c_1^2 + 45 c_1^4")
    assert FormalPolynomial.parse(out) == TWO_POINT["A1D4"]


def test_formula_json_round_trips(capsys):
    _, out, _ = run(capsys, "formula", "--sing", "A1E6", "--format", "json")
    data = json.loads(out)
    assert data["sing"] == "A1E6"
    assert FormalPolynomial.from_json(data) == TWO_POINT["A1E6"]
    assert data["metadata"]["extrapolated"] is False
    assert data["metadata"]["variants"]["pa7"] == "proof"


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--sing", "A1", "--surface", "p2", "--degree", "3")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "12"
    assert "2-ample" in lines[1] and "True" in lines[1]
    assert lines[2] == "generic points: 8"


def test_eval_json_on_quadric(capsys):
    _, out, _ = run(capsys, "eval", "--sing", "A1A1", "--surface", "p1xp1", "--bidegree", "2,2", "--format", "json")
    data = json.loads(out)
    assert data["ampleness"] == {"required": 4, "satisfied": False}
    assert data["surface"]["params"] == {"bidegree": [2, 2]}


def test_eval_custom(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"name": "custom", "params": {}, "geometry": {"c1_sq": 0, "c1_x1": 0, "x1_sq": 0, "x2": 0}}))
    code, out, _ = run(capsys, "eval", "--sing", "A1", "--surface", "custom", "--geometry-file", str(path))
    assert code == 0
    assert out.splitlines()[0] == "0"
    assert "unknown" in out
    assert "error" in out.splitlines()[2]


def test_table_order_and_filter(capsys):
    _, out, _ = run(capsys, "table")
    names = [line.split(")")[0][2:] for line in out.splitlines()]
    assert names[:13] == ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "D4", "D5", "D6", "D7", "E6", "E7"]
    assert names[13:] == ["A1A1", "A1A2", "A1A3", "A1A4", "A1A5", "A1A6", "A1D4", "A1D5", "A1D6", "A1E6"]
    _, out, _ = run(capsys, "table", "--max-codim", "3")
    assert [l.split(" =")[0] for l in out.splitlines()] == ["N(A1)", "N(A2)", "N(A3)", "N(A1A1)", "N(A1A2)"]


def test_table_values(capsys):
    _, out, _ = run(capsys, "table", "--surface", "p2", "--degree", "3", "--max-codim", "2")
    assert out.splitlines() == ["N(A1) = 12", "N(A2) = 24", "N(A1A1) = 42"]


@pytest.mark.parametrize("argv", [
    ["formula"],
    ["formula", "--sing", "A9"],
    ["formula", "--sing", "A7", "--max-codim", "6"],
    ["formula", "--sing", "A1", "--surface", "p2", "--degree", "3"],
    ["eval", "--sing", "A1"],
    ["eval", "--sing", "A1", "--surface", "p2"],
    ["eval", "--sing", "A1", "--surface", "p1xp1"],
    ["eval", "--sing", "A1", "--surface", "custom"],
    ["eval", "--sing", "A1", "--surface", "custom", "--geometry-file", "/nonexistent.json"],
    ["formula", "--sing", "A1", "--degree", "3"],
    ["table", "--sing", "A1"],
])
def test_bad_queries_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_bad_flags_exit_2(capsys):
    for argv in (["formula", "--format", "yaml"], ["eval", "--bidegree", "x"], ["frobnicate"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_json_errors_on_stderr(capsys):
    code, out, err = run(capsys, "eval", "--sing", "A1", "--format", "json")
    assert code == 2
    assert json.loads(err)["error"] == "UsageError"


def test_output_is_deterministic(capsys):
    first = run(capsys, "table", "--format", "json")
    second = run(capsys, "table", "--format", "json")
    assert first == second


def test_selftest_exit_code_matches_checks(capsys):
    code, out, _ = run(capsys, "selftest")
    lines = out.splitlines()
    assert lines and all(l.startswith(("PASS", "FAIL")) for l in lines)
    assert code == (0 if all(l.startswith("PASS") for l in lines) else 1)


def test_cache_env_var(tmp_path, monkeypatch, capsys):
    path = tmp_path / "memo.json"
    monkeypatch.setenv("CHERN_COUNT_CACHE", str(path))
    _, cold, _ = run(capsys, "formula", "--sing", "A1A6")
    data = json.loads(path.read_text())
    assert "A1PA6,0,0,0,0" in data["two_point"]
    assert "PA7,0,0,0,0" in data["one_point"]
    _, warm, _ = run(capsys, "formula", "--sing", "A1A6")
    assert warm == cold


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chern_count", "eval", "--sing", "A2", "--surface", "p2", "--degree", "4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "72"
