import json
import subprocess
import sys

from thuemorse import cli


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert len(lines) == 1, f"expected one output line, got {out!r}"
    return code, json.loads(lines[0])


def test_trace(capsys):
    code, payload = run_json(capsys, ["trace", "00"])
    assert code == 0 and payload == {"value": "1/6"}


def test_factor(capsys):
    code, payload = run_json(capsys, ["factor", "100100"])
    assert code == 0 and payload["is_factor"] is False


def test_factors(capsys):
    code, payload = run_json(capsys, ["factors", "3"])
    assert code == 0
    assert payload["count"] == 6
    assert "000" not in payload["factors"]


def test_slice(capsys):
    code, payload = run_json(capsys, ["slice", "-4", "4"])
    assert code == 0 and payload == {"word": "01100110"}


def test_decompose(capsys):
    code, payload = run_json(
        capsys, ["decompose", "00101101001011001101001100101100"])
    assert code == 0
    assert payload == {"level": 3, "gamma0": "0010110",
                       "blocks": [1, 0, 1], "gamma1": "0"}


def test_decompose_forced_level(capsys):
    code, payload = run_json(
        capsys, ["decompose", "01101", "--level", "0"])
    assert code == 0 and payload["blocks"] == [0, 1, 1, 0, 1]


def test_extensions(capsys):
    code, payload = run_json(capsys, ["extensions", "0101", "2", "2"])
    assert code == 0 and payload["extensions"] == ["10010110"]


def test_freq(capsys):
    code, payload = run_json(capsys, ["freq", "0", "--window", "1048576"])
    assert code == 0 and payload["value"] == "1/2"


def test_matrix(capsys):
    code, payload = run_json(capsys, ["matrix", "1/6", "3"])
    assert code == 0 and (payload["b1"], payload["b2"]) == ("1/48", "1/24")


def test_matrix_interval(capsys):
    code, payload = run_json(capsys, ["matrix", "--interval", "1"])
    assert code == 0 and payload == {"n_max": 1, "lo": "0", "hi": "1/4"}


def test_matrix_requires_arguments(capsys):
    code, payload = run_json(capsys, ["matrix"])
    assert code == 1 and "error" in payload


def test_bratteli(capsys):
    code, payload = run_json(capsys, ["bratteli", "2"])
    assert code == 0
    assert [lev["dimension"] for lev in payload["levels"]] == [4, 10]


def test_bratteli_dot(capsys):
    code, payload = run_json(capsys, ["bratteli", "2", "--dot"])
    assert code == 0 and payload["dot"].startswith("digraph")


def test_k0_reduce(capsys):
    code, payload = run_json(capsys, ["k0-reduce", "0110"])
    assert code == 0
    assert payload == {"word": "0110", "level": 0, "a": 0, "b": 1}


def test_k0_eval(capsys):
    code, payload = run_json(
        capsys, ["k0-eval", "--a", "1", "--b", "-1", "--level", "0"])
    assert code == 0 and payload == {"value": "0"}


def test_rep_check(capsys):
    code, payload = run_json(
        capsys, ["rep-check", "--window", "1024", "--maxlen", "4"])
    assert code == 0 and payload["ok"] is True
    assert set(payload["residuals"].values()) == {0}


def test_verify_quick(capsys):
    code, payload = run_json(capsys, ["verify", "--quick"])
    assert code == 0 and payload["ok"] is True
    assert len(payload["checks"]) == 9


def test_domain_error_exit_code(capsys):
    code, payload = run_json(capsys, ["trace", "100100"])
    assert code == 1 and "error" in payload


def test_usage_errors_exit_two(capsys):
    assert cli.run(["factor", "10a2"]) == 2
    assert cli.run(["no-such-command"]) == 2
    assert cli.run([]) == 2
    capsys.readouterr()


def test_outputs_deterministic(capsys):
    cli.run(["factors", "6"])
    first = capsys.readouterr().out
    cli.run(["factors", "6"])
    second = capsys.readouterr().out
    assert first == second


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "thuemorse.cli", "trace", "0110"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout) == {"value": "1/6"}
