"""Command line interface: reports, JSON schema, and exit codes."""

import json
import subprocess
import sys

from qhopf.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normalize(capsys):
    code, out, _ = run_cli(capsys, "normalize", "a^* * a")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["result"]["text"] == "1 - q*(1 - a a^*)"
    assert report["result"]["terms"] == [
        {"mu": 0, "m": 0, "n": 0, "nu": 0, "coeff": "1"},
        {"mu": 0, "m": 1, "n": 0, "nu": 0, "coeff": "-q"},
    ]


def test_pairing_minus_one(capsys):
    code, out, _ = run_cli(capsys, "pairing", "--mu", "-1")
    assert code == 0
    report = json.loads(out)
    assert report["mu"] == -1
    assert report["value"] == "-1"
    assert report["integer"] is True


def test_trace_command(capsys):
    code, out, _ = run_cli(capsys, "trace", "1 - a*a^*")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["value"] == "1/(1 - q)"
    assert report["result"]["integer"] is False


def test_mul_and_star_and_winding(capsys):
    code, out, _ = run_cli(capsys, "mul", "a", "b")
    assert json.loads(out)["result"]["text"] == "a b"
    code, out, _ = run_cli(capsys, "star", "a * b")
    assert json.loads(out)["result"]["text"] == "a^* b^*"
    code, out, _ = run_cli(capsys, "winding", "a + b*b^*")
    report = json.loads(out)
    assert set(report["result"]) == {"0", "1"}


def test_coaction_and_gluing(capsys):
    code, out, _ = run_cli(capsys, "coaction", "a")
    report = json.loads(out)
    assert report["result"]["terms"] == [
        {"mu": 1, "m": 0, "n": 0, "nu": 0, "u_power": 1, "coeff": "1"}]
    code, out, _ = run_cli(capsys, "gluing-check", "a*b + 1")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_connection_and_idempotent(capsys):
    code, out, _ = run_cli(capsys, "connection", "--k", "1")
    report = json.loads(out)
    assert report["k"] == 1
    assert len(report["result"]) == 2
    code, out, _ = run_cli(capsys, "idempotent", "--mu", "-1")
    report = json.loads(out)
    assert report["size"] == 2
    assert report["text"][0][0] == "1 - (1 - a a^*)"


def test_errors_exit_two(capsys):
    code, _, err = run_cli(capsys, "normalize", "a + * b")
    assert code == 2
    assert "error" in err
    code, _, err = run_cli(capsys, "trace", "a")  # not coinvariant
    assert code == 2
    code, _, _ = run_cli(capsys, "idempotent", "--mu", "0")
    assert code == 2
    assert main(["unknown-command"]) == 2


def test_verify_suite_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "galois")
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert report["reports"][0]["suite"] == "galois"
    names = [c["check_name"] for c in report["reports"][0]["checks"]]
    assert any("closed form" in n for n in names)


def test_verify_text_mode_and_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("QHOPF_SEED", "123")
    code, out, _ = run_cli(capsys, "verify", "classical", "--text")
    assert code == 0
    assert "suite classical: PASS" in out
    assert "seed" in out and "123" in out


def test_cli_subprocess_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "qhopf.cli", "pairing", "--mu", "-1"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["value"] == "-1"
