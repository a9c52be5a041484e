import io
import os
import subprocess
import sys

import pytest

from pathhanoi.cli import run


def call(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def test_solve_four_pegs_two_disks():
    status, out, _ = call("solve", "--h", "4", "--n", "2", "--s", "1", "--d", "4")
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert all(len(line.split()) == 3 for line in lines)
    assert lines[0] == "1 1 2" and lines[-1] == "1 3 4"


def test_count_and_oracle_examples():
    assert call("count", "--kind", "F", "--h", "3", "--n", "4")[1] == "80\n"
    assert call("count", "--kind", "T", "--n", "3")[1] == "19\n"
    assert call("count", "--kind", "G", "--h", "3", "--n", "7", "--s", "1", "--d", "2")[1] == "1093\n"
    assert call("oracle", "--h", "4", "--n", "7", "--s", "1", "--d", "4")[1] == "123\n"


def test_count_approx():
    status, out, _ = call("count", "--kind", "F", "--h", "3", "--n", "100", "--approx")
    assert status == 0 and out.startswith("5.15377520732e+47") and "log3 = 100.0" in out


def test_count_needs_pegs():
    status, _, err = call("count", "--kind", "G", "--h", "4", "--n", "3")
    assert status == 1 and "--s" in err


@pytest.mark.parametrize("h", range(3, 7))
def test_solve_verify_round_trip(h, tmp_path):
    path = tmp_path / "moves.txt"
    for n in range(0, 7):
        for s in range(1, h + 1):
            for d in range(1, h + 1):
                status, out, _ = call("solve", "--h", str(h), "--n", str(n), "--s", str(s), "--d", str(d))
                assert status == 0
                path.write_text(out)
                args = ("--h", str(h), "--n", str(n), "--s", str(s), "--d", str(d))
                assert call("verify", *args, "--input", str(path)) == (0, "OK\n", "")
                assert call("solve", *args, "--count-only")[1] == f"{out.count(chr(10))}\n"


def test_verify_names_the_rule(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 1 2\n2 1 2\n")
    status, _, err = call("verify", "--h", "3", "--n", "2", "--s", "1", "--d", "3", "--input", str(path))
    assert status == 1 and "SmallerBelow" in err and "move 2" in err
    path.write_text("1 1 2\n")
    status, _, err = call("verify", "--h", "3", "--n", "1", "--s", "1", "--d", "3", "--input", str(path))
    assert status == 1 and "not all disks on peg 3" in err
    path.write_text("1 1\n")
    assert call("verify", "--h", "3", "--n", "1", "--s", "1", "--d", "3", "--input", str(path))[0] == 1


def test_solve_on_a_sub_interval(tmp_path):
    status, out, _ = call("solve", "--h", "6", "--n", "5", "--s", "4", "--d", "2", "--pegs", "2", "5")
    assert status == 0
    assert all(2 <= int(p) <= 5 for line in out.splitlines() for p in line.split()[1:])
    path = tmp_path / "m.txt"
    path.write_text(out)
    assert call("verify", "--h", "6", "--n", "5", "--s", "4", "--d", "2", "--input", str(path))[0] == 0
    assert call("solve", "--h", "6", "--n", "5", "--s", "4", "--d", "2", "--pegs", "3", "7")[0] == 1


def test_validation_errors_exit_nonzero():
    assert call("solve", "--h", "4", "--n", "3", "--s", "1", "--d", "3", "--algorithm", "four")[0] == 1
    assert call("solve", "--h", "4", "--n", "3", "--s", "0", "--d", "3")[0] == 1
    assert call("partition", "--h", "4", "--n", "0")[0] == 1
    with pytest.raises(SystemExit) as info:
        call("solve", "--h", "4", "--n", "-2", "--s", "1", "--d", "3")
    assert info.value.code == 2


def test_partition_output():
    assert call("partition", "--h", "4", "--n", "10")[1] == "B1 6 [1, 6]\nB2 3 [7, 9]\nB3 1 [10, 10]\n"
    assert call("partition", "--h", "4", "--n", "1")[1] == "B1 0 empty\nB2 0 empty\nB3 1 [1, 1]\n"


def test_table1_and_bounds_csv():
    status, out, _ = call("table1", "--n-max", "3", "--format", "csv")
    assert status == 0 and out.splitlines()[3] == "3,7,9,12,19,0.744"
    status, out, err = call("bounds", "--h", "5", "--n-max", "10")
    assert status == 0 and out.splitlines()[0] == "h,n,logF,logU,ratio" and len(out.splitlines()) == 11
    assert "not asserted" in err and "FAIL" not in err


def test_check_command():
    status, out, _ = call("check", "--h-max", "5", "--n-max", "40", "--oracle-n", "6")
    assert status == 0 and "FAIL" not in out and out.count("PASS") >= 20


def test_budget_exhaustion_and_environment(monkeypatch):
    status, _, err = call("oracle", "--h", "4", "--n", "7", "--s", "1", "--d", "4", "--budget", "1000")
    assert status == 1 and "budget" in err
    monkeypatch.setenv("HANOI_STATE_BUDGET", "1000")
    assert call("oracle", "--h", "4", "--n", "7", "--s", "1", "--d", "4")[0] == 1


def _cli(*argv, **kw):
    return subprocess.run([sys.executable, "-m", "pathhanoi", *argv], capture_output=True, text=True, **kw)


def test_module_entry_point_pipes_and_is_deterministic():
    args = ("--h", "5", "--n", "6", "--s", "2", "--d", "5")
    first, second = _cli("solve", *args), _cli("solve", *args)
    assert first.returncode == 0 and first.stdout == second.stdout
    checked = _cli("verify", *args, input=first.stdout)
    assert checked.returncode == 0 and checked.stdout == "OK\n"
    env = dict(os.environ, HANOI_STATE_BUDGET="10")
    assert _cli("oracle", "--h", "4", "--n", "3", "--s", "1", "--d", "4", env=env).returncode == 1
