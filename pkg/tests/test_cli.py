import io
import json
import subprocess
import sys
from math import isqrt

import pytest

from pythapair.cli import CSV_HEADER, main, sweep_csv


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_process(*argv):
    return subprocess.run(
        [sys.executable, "-m", "pythapair", *argv], capture_output=True, text=True
    )


def test_analyze_json_mode28():
    code, text = run("analyze", "--a", "3", "--b", "4")
    assert code == 0
    data = json.loads(text)
    assert data["curve"] == {"A": "337", "B": "20736"}
    assert data["torsion"]["structure"] == "Z2xZ8"
    assert data["torsion"]["count"] == 16
    assert data["audit"]["pass"] is True


def test_analyze_mode24_text():
    code, text = run("analyze", "--a", "9", "--b", "12", "--mode", "24", "--format", "text")
    assert code == 0
    assert "lambda=3" in text
    assert "torsion Z2xZ4, 8 points" in text


@pytest.mark.parametrize("argv", [
    ("analyze", "--a", "3", "--b", "5"),
    ("analyze", "--a", "0", "--b", "4"),
    ("witness", "--a", "3", "--b", "4", "--height", "0"),
    ("from-pair", "--a", "3", "--b", "4", "--k", "3", "--l", "4"),
    ("from-pair", "--a", "3", "--b", "4", "--k", "8", "--l", "6"),
    ("from-pair", "--a", "3", "--b", "4", "--k", "0", "--l", "6"),
    ("sweep", "--max-hyp", "0"),
])
def test_input_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_parser_errors_exit_2():
    assert run_process("analyze", "--a", "x", "--b", "4").returncode == 2


def test_witness_inconclusive_exit_3():
    code, text = run("witness", "--a", "3", "--b", "4", "--height", "5")
    assert code == 3 and text == ""


def test_witness_count_zero():
    code, text = run("witness", "--a", "3", "--b", "4", "--count", "0")
    assert code == 0 and json.loads(text) == []


def test_witness_then_verify_in_separate_process(tmp_path):
    code, text = run("witness", "--a", "7", "--b", "24", "--mode", "24", "--count", "3")
    assert code == 0
    certs = json.loads(text)
    assert len(certs) == 3
    path = tmp_path / "certs.json"
    path.write_text(text)
    proc = run_process("verify", str(path))
    assert proc.returncode == 0, proc.stdout
    assert "3/3 certificates verified" in proc.stdout

    certs[1]["k"] = str(int(certs[1]["k"]) + 2)
    path.write_text(json.dumps(certs))
    proc = run_process("verify", str(path))
    assert proc.returncode == 1
    assert "certificate 1: FAIL" in proc.stdout


def test_verify_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('[{"mode": "24", "a": ')
    assert run("verify", str(path))[0] == 2
    assert run("verify", str(tmp_path / "missing.json"))[0] == 2
    path.write_text("[1, 2]")
    assert run("verify", str(path))[0] == 2


def test_from_pair_with_family(tmp_path):
    code, text = run("from-pair", "--a", "7", "--b", "24", "--mode", "24",
                     "--k", "99", "--l", "20", "--family", "3")
    assert code == 0
    data = json.loads(text)
    assert data["classification"] == "InfiniteOrder"
    num, den = int(data["point"]["x"]["num"]), int(data["point"]["x"]["den"])
    assert isqrt(num) ** 2 == num and isqrt(den) ** 2 == den
    assert len(data["family"]) == 3
    path = tmp_path / "fam.json"
    path.write_text(text)
    assert run("verify", str(path))[0] == 0


def test_config_file_and_override(tmp_path):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"height": 1}))
    assert run("witness", "--a", "7", "--b", "24", "--mode", "24", "--config", str(conf))[0] == 3
    code, _ = run("witness", "--a", "7", "--b", "24", "--mode", "24",
                  "--config", str(conf), "--height", "2", "--count", "1")
    assert code == 0
    conf.write_text(json.dumps({"heigth": 1}))
    assert run("witness", "--a", "7", "--b", "24", "--config", str(conf))[0] == 2


def test_sweep_smallest():
    code, text = run("sweep", "--max-hyp", "5", "--mode", "28")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1:] == ["3,4,5,28,Z2xZ8,pass,InconclusiveWithinBound,0,0"]


def test_sweep_output_file_and_workers(tmp_path):
    path = tmp_path / "s.csv"
    code, text = run("sweep", "--max-hyp", "30", "--output", str(path), "--workers", "2")
    assert code == 0 and text == ""
    assert path.read_text() == sweep_csv(30, ("24", "28"), 30, 50, 3)


def test_sweep_is_deterministic():
    assert run("sweep", "--max-hyp", "30")[1] == run("sweep", "--max-hyp", "30")[1]
