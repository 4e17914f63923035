import json
import subprocess
import sys

import pytest

from nilcoxeter import cli, pirep, verify


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_loewy(capsys):
    assert run(["loewy", "--n", "4"], capsys) == (0, "1 3 5 6 5 3 1\n", "")
    code, out, _ = run(["loewy", "--n", "6"], capsys)
    assert out.split()[:8] == "1 5 14 29 49 71 90 101".split()
    code, out, _ = run(["loewy", "--type", "B:2", "--format", "json"], capsys)
    assert json.loads(out) == {"layers": [1, 2, 2, 2, 1]}


def test_zring_normalize(capsys):
    code, out, _ = run(["zring", "normalize", "--n", "9", verify.WORKED_CANONICAL], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "canonical " + verify.WORKED_CANONICAL
    assert [x.strip() for x in lines[2:8]] == verify.WORKED_STEPS
    code, out, _ = run(["zring", "normalize", "--n", "3", "[1,2][2,3]"], capsys)
    assert out == "canonical 0\n"


def test_zring_rank(capsys):
    code, out, _ = run(["zring", "rank", "--n", "4", "--max-degree", "3", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["ranks"] == [[0, 1, 1], [1, 3, 3], [2, 6, 6], [3, 10, 10]]


@pytest.mark.parametrize("argv", [
    ["group", "--type", "H:3"], ["algebra", "--type", "G:2"], ["resolve", "--n", "3"],
    ["ext", "--type", "B:2", "--p", "2"], ["pirep", "--n", "4"], ["koszul", "--n", "3"],
])
def test_subcommands_pass(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 0, err
    assert out


@pytest.mark.parametrize("argv", [
    [], ["nonsense"], ["loewy"], ["loewy", "--n", "1"], ["ext", "--type", "Q:2"],
    ["ext", "--type", "A:2", "--p", "4"], ["zring", "normalize", "--n", "3", "[1,7]"],
    ["zring", "normalize", "--n", "3", "[1,2"], ["resolve", "--max-degree", "-1"],
    ["group", "--type", "A:3", "--format", "xml"],
])
def test_bad_arguments(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_failed_check_names_itself(monkeypatch, capsys):
    monkeypatch.setattr(pirep, "image_dimension", lambda rep, p: 1)
    code, _, err = run(["pirep", "--n", "3"], capsys)
    assert code == 1
    assert "surjectivity" in err


def test_verify_all_failure_exit(monkeypatch, capsys):
    broken = verify.Result(2, "broken check", False, 1)
    monkeypatch.setattr(verify, "run_all", lambda **kw: [broken])
    code, out, err = run(["verify-all", "--quick"], capsys)
    assert code == 1 and "broken check" in err
    assert "[FAIL]" in out


def test_verify_all_n4(capsys):
    code, out, err = run(["verify-all", "--n", "4", "--p", "3"], capsys)
    assert code == 0, out + err
    lines = out.splitlines()
    assert len(lines) == 10 and all(x.startswith("[PASS]") for x in lines)


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "nilcoxeter", "verify-all", "--quick", "--only", "1,2,8,9",
            "--format", "json"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b
    assert [r["criterion"] for r in json.loads(a)["results"]] == [1, 2, 8, 9]
