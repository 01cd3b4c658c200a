"""CLI surface: outputs, JSON mode, exit codes."""

import json
import subprocess
import sys


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "miflab.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_order_examples():
    code, out, _ = run_cli("order", "--p", "2", "--c", "1,1", "--window", "0..1")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run_cli("order", "--p", "2", "--c", "1", "--window", "0..0")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run_cli("order", "--p", "3", "--c", "2", "--window", "0..1")
    assert code == 0 and out.strip() == "27"


def test_order_json():
    code, out, _ = run_cli("--json", "order", "--p", "2", "--c", "1,1", "--window", "0..1")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 4 and data["window"] == "0..1"


def test_check_direct_product():
    code, out, _ = run_cli("--json", "check", "--id", "direct-product", "--A", "C2", "--B", "C2")
    assert code == 0
    assert json.loads(out)["verdict"] is True


def test_check_wreath():
    code, out, _ = run_cli("--json", "check", "--id", "wreath", "--base", "C2", "--top", "C2")
    assert code == 0
    assert json.loads(out)["verdict"] is True


def test_check_factorial():
    code, out, _ = run_cli(
        "--json", "check", "--id", "factorial", "--group", "S4",
        "--normal", "(12)(34),(13)(24)",
    )
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] is True and data["normal_order"] == 4


def test_check_word_with_witness():
    code, out, _ = run_cli("--json", "check", "--word", "[[x,(12)],(13)]", "--group", "S3")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] is False
    assert "counterexample" in data


def test_grig_subcommands():
    code, out, _ = run_cli("grig", "act", "--word", "a", "--string", "010")
    assert code == 0 and out.strip() == "110"
    code, out, _ = run_cli("--json", "grig", "trivial", "--word", "adadadad")
    assert code == 0 and json.loads(out)["trivial"] is True
    code, out, _ = run_cli("--json", "grig", "trivial", "--word", "ab")
    data = json.loads(out)
    assert code == 0 and data["trivial"] is False and "moved_string" in data
    code, out, _ = run_cli("--json", "grig", "verify-identity", "--max-len", "4")
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == [] and data["words_checked"] == 41


def test_search():
    code, out, _ = run_cli("--json", "search", "--word", "[x, t]")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "WitnessFound" and data["witness"] == "a0"


def test_drive_verify_round_trip(tmp_path):
    certs = tmp_path / "certs.jsonl"
    code, _, _ = run_cli("drive", "--count", "8", "--out", str(certs))
    assert code == 0
    code, out, _ = run_cli("--json", "verify", str(certs))
    assert code == 0
    assert json.loads(out)["failures"] == []


def test_verify_detects_forgery(tmp_path):
    certs = tmp_path / "certs.jsonl"
    run_cli("drive", "--count", "3", "--out", str(certs))
    lines = certs.read_text().splitlines()
    data = json.loads(lines[0])
    data["witness"] = "1"
    lines[0] = json.dumps(data)
    certs.write_text("\n".join(lines) + "\n")
    code, out, _ = run_cli("--json", "verify", str(certs))
    assert code == 3
    assert json.loads(out)["failures"]


def test_exit_code_capacity():
    code, _, err = run_cli(
        "order", "--p", "2", "--c", "n", "--window", "0..4", "--max-cosets", "1000"
    )
    assert code == 2
    assert json.loads(err)["error"] == "capacity"


def test_exit_code_parse_error():
    code, _, err = run_cli("search", "--word", "[x")
    assert code == 4
    assert json.loads(err)["error"] == "parse"


def test_selftest_seeded():
    code, out, _ = run_cli("--json", "selftest", "--seed", "3", "--samples", "50")
    assert code == 0
    assert json.loads(out)["failures"] == []


def test_threads_flag_does_not_change_results(tmp_path):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    run_cli("--threads", "1", "drive", "--count", "10", "--out", str(a))
    run_cli("--threads", "8", "drive", "--count", "10", "--out", str(b))
    assert a.read_text() == b.read_text()
