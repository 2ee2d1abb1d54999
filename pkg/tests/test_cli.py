import csv
import io
import json
import subprocess
import sys

from legdet import cli
from legdet.identities import CheckResult, VerificationReport
from legdet.render import format_value, parse_value


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "legdet", *args],
        capture_output=True,
        text=True,
    )


def test_cx_command():
    r = run_cli("cx", "--p", "13")
    assert r.returncode == 0
    assert r.stdout == "-65*x - 18\n"
    assert run_cli("cx", "--p", "7").stdout == "1\n"


def test_cx_rejects_non_prime():
    r = run_cli("cx", "--p", "9")
    assert r.returncode == 2
    assert "9" in r.stderr


def test_unit_command():
    r = run_cli("unit", "--p", "5")
    assert r.returncode == 0
    lines = dict(line.split(" = ") for line in r.stdout.strip().splitlines())
    assert lines["eps"] == "(1 + sqrt(5))/2"
    assert lines["h"] == "1"
    assert lines["exponent"] == "3"
    assert lines["a"] == "2"
    assert lines["b"] == "1"


def test_unit_rejects_3_mod_4():
    r = run_cli("unit", "--p", "7")
    assert r.returncode == 2
    assert "no unit" in r.stderr


def test_verify_pmax_boundary():
    assert run_cli("verify", "--pmax", "2").returncode == 2


def test_verify_text_report():
    r = run_cli("verify", "--pmax", "7", "--trials", "3")
    assert r.returncode == 0
    assert "theorem_cx" in r.stdout
    assert "0 failed" in r.stdout
    assert "!=" not in r.stdout


def test_verify_json_roundtrip():
    """Every lhs/rhs string in the JSON report parses back to a value whose
    canonical form is the same string."""
    r = run_cli("verify", "--pmax", "13", "--trials", "5", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["all_pass"] is True
    assert doc["config"]["p_max"] == 13
    assert len(doc["checks"]) > 10
    for c in doc["checks"]:
        for side in ("lhs", "rhs"):
            value = parse_value(c[side], p=c["p"])
            assert format_value(value) == c[side]
        assert (c["status"] == "pass") == (c["lhs"] == c["rhs"])


def test_verify_json_deterministic():
    args = ("verify", "--pmax", "13", "--seed", "42", "--format", "json")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.encode() == b.stdout.encode()


def test_verify_csv_columns():
    r = run_cli("verify", "--pmax", "5", "--trials", "2", "--format", "csv")
    assert r.returncode == 0
    rows = list(csv.reader(io.StringIO(r.stdout)))
    assert rows[0] == ["check_name", "p", "status", "lhs", "rhs", "detail"]
    assert all(len(row) == 6 for row in rows)
    body = rows[1:]
    assert all(row[2] == "pass" for row in body)
    # generic checks carry an empty p column
    assert any(row[1] == "" and row[0].startswith("lemma_uv") for row in body)


def test_decomp_command():
    r = run_cli("decomp", "--p", "13")
    assert r.returncode == 0
    assert "decomposition" in r.stdout
    assert run_cli("decomp", "--p", "7").returncode == 2


def test_carlitz_command():
    r = run_cli("carlitz", "--p", "7", "--format", "csv")
    assert r.returncode == 0
    assert "carlitz,7,pass,49,49" in r.stdout


def test_sun_command_all_and_single():
    r = run_cli("sun", "--p", "13", "--d", "all", "--format", "csv")
    assert r.returncode == 0
    assert len(r.stdout.strip().splitlines()) == 14  # header + one row per d
    single = run_cli("sun", "--p", "13", "--d", "3")
    assert single.returncode == 0 and "sun[d=03]" in single.stdout
    assert run_cli("sun", "--p", "13", "--d", "13").returncode == 2
    assert run_cli("sun", "--p", "13", "--d", "junk").returncode == 2
    assert run_cli("sun", "--p", "7", "--d", "1").returncode == 2


def test_lemma_uv_command_reproducible():
    args = ("lemma-uv", "--trials", "20", "--m", "4", "--seed", "42", "--format", "json")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert len(doc["checks"]) == 20
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_unknown_flag_is_usage_error():
    assert run_cli("verify", "--nope").returncode == 2
    assert run_cli().returncode == 2


def test_exit_code_one_on_identity_failure(monkeypatch):
    """Failed identities exit 1, distinct from usage errors; forced with a
    synthetic failing report since no real prime produces one."""
    fake = VerificationReport(
        (CheckResult("theorem_cx", 5, False, "1", "2", ""),),
        {"p_max": 5},
        0.0,
    )
    monkeypatch.setattr(cli, "run_suite", lambda pmax, options: fake)
    out = io.StringIO()
    args = cli._build_parser().parse_args(["verify", "--pmax", "5"])
    assert cli._dispatch(args, out) == 1
    assert "!=" in out.getvalue()


def test_emit_report_fail_rendering():
    rep = VerificationReport(
        (CheckResult("evil_det", 13, False, "-18", "-17", "first divergent entry (i, j) = (0, 1)"),),
        {},
        0.0,
    )
    out = io.StringIO()
    cli.emit_report(rep, "text", out)
    text = out.getvalue()
    assert "fail" in text and "!=" in text and "(0, 1)" in text
    out = io.StringIO()
    cli.emit_report(rep, "csv", out)
    assert "evil_det,13,fail,-18,-17," in out.getvalue()
