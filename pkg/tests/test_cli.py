import json
import subprocess
import sys

import pytest

from siegeldim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim_scalar(capsys):
    code, out, _ = run(capsys, "dim", "--degree", "2", "--weight", "4", "--level", "3")
    assert code == 0
    assert "total: 15" in out


def test_dim_vector_json(capsys):
    code, out, _ = run(capsys, "dim", "--weights", "6,5,5", "--level", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["total"] == {"num": "210210", "den": "1"}
    assert data["weights"] == [6, 5, 5] and data["path"] == "vector" and data["proven_range"]
    assert [t["r"] for t in data["terms"]] == [0, 1, 2, 3]
    assert json.dumps(data, indent=2) + "\n" == out


def test_dim_out_of_range(capsys):
    code, _, err = run(capsys, "dim", "--degree", "1", "--weight", "2", "--level", "3")
    assert code == 2
    assert "k > n+1" in err


def test_dim_force(capsys):
    code, out, _ = run(capsys, "dim", "--degree", "2", "--weight", "3", "--level", "2", "--force", "--json")
    assert code == 0
    assert json.loads(out)["proven_range"] is False


def test_dim_cross_check(capsys):
    code, out, _ = run(capsys, "dim", "--degree", "3", "--weight", "6", "--level", "4", "--cross-check")
    assert code == 0
    assert out.count("[ok]") == 4
    code, out, _ = run(capsys, "dim", "--weights", "7,6,6", "--level", "5", "--path", "all")
    assert code == 0 and out.count("[ok]") == 2


def test_dim_cross_check_reports_mismatch(capsys):
    code, out, _ = run(capsys, "dim", "--degree", "6", "--weight", "8", "--level", "3", "--cross-check")
    assert code == 3
    assert "MISMATCH" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["dim", "--weight", "4", "--level", "3"],
        ["dim", "--degree", "2", "--weight", "4", "--weights", "4,4", "--level", "3"],
        ["dim", "--degree", "3", "--weights", "4,4", "--level", "3"],
        ["dim", "--weights", "4,5", "--level", "3"],
        ["dim", "--weights", "a,b", "--level", "3"],
        ["dim", "--weights", "7,6", "--level", "3", "--path", "t115"],
        ["constants", "shintani", "--rank", "4", "--degree", "2"],
        ["bogus"],
    ],
)
def test_input_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(argv))
    assert info.value.code == 1


def test_tables_only_n6(capsys):
    code, out, _ = run(capsys, "tables", "--only", "n6", "--path", "closed")
    assert code == 0
    assert out.count("PASS n6") == 3


def test_tables_only_n1_closed(capsys):
    code, out, _ = run(capsys, "tables", "--only", "n1", "--path", "closed")
    assert code == 0
    assert out.strip().splitlines()[-1] == "51/51 cells PASS"


def test_tables_quiet_uses_exit_code_only(capsys):
    code, out, err = run(capsys, "tables", "--only", "n2", "--quiet")
    assert code == 0 and out == "" and err == ""
    code, out, _ = run(capsys, "tables", "--only", "n6", "--path", "t115", "--quiet")
    assert code == 3 and out == ""


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["shintani", "--rank", "2", "--degree", "2"], "1/96"),
        (["bernoulli", "--m", "1"], "1/2"),
        (["index", "--degree", "1", "--level", "3"], "24"),
        (["zeta", "--j", "2"], "1/120"),
        (["ifactor", "--degree", "1", "--rank", "1"], "-1/4"),
        (["cscalar", "--weight", "4", "--degree", "2", "--rank", "1"], "5/8"),
        (["cvector", "--weights", "6,5,5", "--rank", "3"], "3/8"),
        (["level-scale", "--rank", "2", "--degree", "2", "--level", "4"], "1/16"),
    ],
)
def test_constants(capsys, argv, expected):
    code, out, _ = run(capsys, "constants", *argv)
    assert code == 0
    assert out.strip() == expected


def test_constants_approx(capsys):
    code, out, _ = run(capsys, "constants", "bernoulli", "--m", "12", "--approx")
    assert code == 0
    exact, dec = out.strip().splitlines()
    assert exact == "-691/2730"
    assert dec.startswith("-0.25311355311355311")


def test_constants_range_error(capsys):
    code, _, _ = run(capsys, "constants", "cvector", "--weights", "4,4,4", "--rank", "1")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "siegeldim", "dim", "--degree", "1", "--weight", "5", "--level", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "total: 5" in proc.stdout
