import json
import shutil
import subprocess
import sys

import pytest

import seqlab.cli as cli
from seqlab import __version__
from seqlab.cli import main
from seqlab.report import FAIL, CheckResult

GOLDEN_TABLE = """n,a,x_num,x_den,d,e,q
0,1,1,1,1,0,1
1,1,1,1,1,0,1
2,2,2,1,1,1,1
3,4,2,1,2,2,1
4,10,5,2,2,1,5
5,26,13,5,2,1,13
6,76,38,13,2,2,19
7,232,58,19,4,3,29
8,764,191,58,4,2,191
9,2620,655,191,4,2,655
"""


def test_table_csv_golden(capsys):
    assert main(["table", "--max", "9"]) == 0
    assert capsys.readouterr().out == GOLDEN_TABLE


def test_table_json(capsys):
    assert main(["table", "--max", "5", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 6
    assert rows[4] == {
        "n": 4, "a": "10", "x_num": "5", "x_den": "2", "d": "2", "e": 1, "q": "5",
    }
    assert isinstance(rows[4]["n"], int)
    assert isinstance(rows[4]["a"], str)


def test_table_writes_file(tmp_path):
    out = tmp_path / "table.csv"
    assert main(["table", "--max", "9", "--out", str(out)]) == 0
    assert out.read_text() == GOLDEN_TABLE


@pytest.mark.parametrize("value", ["-1", "20001"])
def test_table_max_out_of_range(value, capsys):
    assert main(["table", "--max", value]) == 2
    assert "--max" in capsys.readouterr().err


def test_verify_text_output(capsys):
    rc = main(["verify", "--max", "60", "--order", "30", "--checks", "parity,e_q,x_bounds"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.splitlines()[0].startswith("PASS e_q [0,60]")
    assert "PASS parity" in out
    assert "PASS x_bounds [4,60]" in out
    assert out.splitlines()[-1] == "aggregate: pass"


def test_verify_json_structure(capsys):
    rc = main(["verify", "--max", "40", "--order", "20", "--format", "json",
               "--checks", "integrality,series"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["tool_version"] == __version__
    assert doc["config"]["max_n"] == 40
    assert [r["name"] for r in doc["results"]] == ["integrality", "series"]
    assert doc["aggregate"] == "pass"
    for r in doc["results"]:
        assert set(r) == {"name", "range", "status", "counterexamples", "elapsed_ms"}


def test_verify_unknown_check(capsys):
    assert main(["verify", "--checks", "nope"]) == 2
    assert "unknown checks: nope" in capsys.readouterr().err


def test_verify_rejects_bad_flags(capsys):
    assert main(["verify", "--order", "1"]) == 2
    assert main(["verify", "--jobs", "0"]) == 2
    assert main(["verify", "--checks", " , "]) == 2
    assert main(["verify", "--max", "-3"]) == 2


def test_verify_exit_code_on_failure(monkeypatch, capsys):
    def fake_run_all(config, a_values=None, jobs=1):
        return [CheckResult(name="parity", lo=1, hi=2, status=FAIL,
                            counterexamples=[(2, "boom")])]

    monkeypatch.setattr(cli, "run_all", fake_run_all)
    rc = main(["verify", "--checks", "parity", "--max", "10"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "FAIL parity" in out
    assert "n=2: boom" in out
    assert "aggregate: fail" in out


def test_series_output(capsys):
    rc = main(["series", "--order", "20"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "c[0] = 1\n" in out
    assert "c[3] = 2/3\n" in out
    assert "c[8] = 191/10080\n" in out
    for part in ("convolution", "exp_closed_form", "product_exp_x2", "second_order_ode"):
        assert f"PASS {part}\n" in out


def test_series_rejects_tiny_order(capsys):
    assert main(["series", "--order", "1"]) == 2
    assert "--order" in capsys.readouterr().err


def test_oracle_output(capsys):
    rc = main(["oracle", "--max", "6"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "n=0 enumerated=1 companion=1 ok"
    assert lines[6] == "n=6 enumerated=76 companion=76 ok"
    assert all(line.endswith(" ok") for line in lines)


def test_oracle_cap(capsys):
    assert main(["oracle", "--max", "11"]) == 2
    assert "capped at 10" in capsys.readouterr().err


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 2


def test_version_flag(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "seqlab", "table", "--max", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("n,a,x_num,x_den,d,e,q\n")
    assert proc.stdout.rstrip().splitlines()[-1] == "3,4,2,1,2,2,1"


def test_console_script_subprocess():
    exe = shutil.which("seqlab")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "--version"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert __version__ in proc.stdout
