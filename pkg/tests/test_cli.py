import json
import shutil
import subprocess
import sys

import jsonschema
import pytest

from newton_gauge.cli import EXIT_BAD_INPUT, EXIT_BUDGET, EXIT_OK, EXIT_VIOLATION, main
from newton_gauge.oracle import BUDGET_ENV_VAR, BipartitionCheck, VerificationReport
from newton_gauge.report import load_schema


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _run_json(capsys, *argv):
    code, out, err = _run(capsys, *argv)
    report = json.loads(out)
    jsonschema.validate(report, load_schema())
    return code, report, err


# ---------------------------------------------------------------------------
# analyze


def test_analyze_text(capsys):
    code, out, err = _run(capsys, "analyze", "--poly", "x^6+2*x^3+8", "--prime", "2")
    assert code == EXIT_OK
    assert "certificate       TB" in out
    assert "newton index      -1/3 (attained at 3)" in out
    assert err == ""


def test_analyze_json(capsys):
    code, report, _ = _run_json(
        capsys, "analyze", "--poly", "x^6+2*x^3+8", "--prime", "2", "--json"
    )
    assert code == EXIT_OK
    assert report["certificate"]["theorem"] == "TB"
    assert report["certificate"]["parameters"]["modulus"] == 3
    assert "verification" not in report


def test_analyze_with_verification(capsys):
    code, report, _ = _run_json(
        capsys, "analyze", "--poly", "x^2+2", "--prime", "2", "--verify", "--json"
    )
    assert code == EXIT_OK
    assert report["verification"]["passed"] is True
    assert report["verification"]["no_split_clauses"] == ["Irreducible"]


def test_analyze_none_certificate_is_success(capsys):
    code, out, _ = _run(capsys, "analyze", "--poly", "x^2+3x+9", "--prime", "3")
    assert code == EXIT_OK
    assert "certificate       none" in out
    assert "note: no-strict-dominant-index" in out


# ---------------------------------------------------------------------------
# verify


def test_verify_factorable_input(capsys):
    code, out, _ = _run(capsys, "verify", "--poly", "(x-1)*(x+1)", "--prime", "2")
    assert code == EXIT_OK
    assert "verification      PASS" in out


def test_verify_skips_when_no_certificate(capsys):
    code, report, _ = _run_json(
        capsys, "verify", "--poly", "x^2+3x+9", "--prime", "3", "--json"
    )
    assert code == EXIT_OK
    assert report["verification"] == {"skipped": "no certificate to verify"}


def test_verify_budget_exhaustion_exits_3(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "1")
    code, out, err = _run(capsys, "verify", "--poly", "x^4+1", "--prime", "2")
    assert code == EXIT_BUDGET
    assert "oracle out of budget" in err
    # without verification the oracle never runs, so the budget is moot
    code, _, _ = _run(capsys, "analyze", "--poly", "x^4+1", "--prime", "2")
    assert code == EXIT_OK


def test_invalid_budget_env_is_bad_input(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "abc")
    code, _, err = _run(capsys, "verify", "--poly", "x^4+1", "--prime", "2")
    assert code == EXIT_BAD_INPUT
    assert "must be a positive integer" in err


def test_verification_failure_exits_4(capsys, monkeypatch):
    failing = VerificationReport(
        passed=False,
        content_valuation=0,
        factor_degrees=(1, 1),
        bipartitions=(BipartitionCheck(degrees=(1, 1), satisfied=()),),
        no_split_clauses=(),
    )
    monkeypatch.setattr(
        "newton_gauge.cli.verify_certificate", lambda *a, **k: failing
    )
    code, out, _ = _run(capsys, "verify", "--poly", "(x-1)*(x+1)", "--prime", "2")
    assert code == EXIT_VIOLATION
    assert "verification      FAIL" in out


# ---------------------------------------------------------------------------
# bad inputs


def test_composite_prime_is_rejected(capsys):
    code, _, err = _run(capsys, "analyze", "--poly", "x^2+2", "--prime", "4")
    assert code == EXIT_BAD_INPUT
    assert "4 is not prime" in err


def test_parse_error_is_rejected(capsys):
    code, _, err = _run(capsys, "analyze", "--poly", "x^^2", "--prime", "2")
    assert code == EXIT_BAD_INPUT
    assert "at position" in err


def test_precondition_violations_are_rejected(capsys):
    code, _, err = _run(capsys, "analyze", "--poly", "x+1", "--prime", "2")
    assert code == EXIT_BAD_INPUT
    assert "degree >= 2" in err
    code, _, err = _run(capsys, "analyze", "--poly", "x^2+x", "--prime", "2")
    assert code == EXIT_BAD_INPUT
    assert "nonzero constant term" in err


# ---------------------------------------------------------------------------
# sweep


def test_sweep_exhaustive(capsys):
    code, report, _ = _run_json(
        capsys,
        "sweep", "--max-degree", "2", "--coeff-bound", "1",
        "--primes", "2,3", "--exhaustive", "--json",
    )
    assert code == EXIT_OK
    assert report["total"] == 24
    assert report["passed"] is True
    assert report["violations"] == []


def test_sweep_sampled(capsys):
    code, report, _ = _run_json(
        capsys,
        "sweep", "--max-degree", "4", "--coeff-bound", "3",
        "--sample", "20", "--seed", "3", "--json",
    )
    assert code == EXIT_OK
    assert report["total"] == 40  # 20 polynomials under the default primes 2,3
    assert report["corpus"]["seed"] == 3


def test_sweep_family_example2(capsys):
    code, report, _ = _run_json(
        capsys,
        "sweep", "--family", "example2", "--d", "2", "--primes", "2", "--json",
    )
    assert code == EXIT_OK
    assert report["family_rows"][0]["theorem"] == "TB"
    assert report["family_rows"][0]["matches_closed_form"] is True


def test_sweep_family_example1_no_verify(capsys):
    code, out, _ = _run(
        capsys,
        "sweep", "--family", "example1", "--n", "5,6", "--primes", "2,3", "--no-verify",
    )
    assert code == EXIT_OK
    assert "result            PASS" in out


def test_sweep_family_requires_values(capsys):
    code, _, err = _run(capsys, "sweep", "--family", "example1", "--primes", "2")
    assert code == EXIT_BAD_INPUT
    assert "requires --n" in err
    code, _, err = _run(capsys, "sweep", "--family", "example2", "--primes", "2")
    assert code == EXIT_BAD_INPUT
    assert "requires --d" in err


def test_sweep_validates_primes(capsys):
    code, _, err = _run(capsys, "sweep", "--max-degree", "2", "--primes", "2,4")
    assert code == EXIT_BAD_INPUT
    assert "4 is not prime" in err
    code, _, err = _run(capsys, "sweep", "--primes", "")
    assert code == EXIT_BAD_INPUT
    assert "must not be empty" in err
    code, _, err = _run(capsys, "sweep", "--primes", "2;3")
    assert code == EXIT_BAD_INPUT
    assert "comma-separated" in err


def test_sweep_violations_exit_4(capsys, monkeypatch):
    from newton_gauge.oracle import SweepSummary, Violation

    broken = SweepSummary(corpus={"mode": "exhaustive"})
    broken.total = 1
    broken.violations.append(Violation("certificate", {"polynomial": "x^2+2"}))
    monkeypatch.setattr("newton_gauge.cli.sweep", lambda *a, **k: broken)
    code, out, _ = _run(capsys, "sweep", "--max-degree", "2")
    assert code == EXIT_VIOLATION
    assert "result            FAIL" in out


def test_exhaustive_and_sample_are_exclusive():
    with pytest.raises(SystemExit):
        main(["sweep", "--exhaustive", "--sample", "10"])


# ---------------------------------------------------------------------------
# process-level entry points


def test_module_invocation_round_trip():
    proc = subprocess.run(
        [sys.executable, "-m", "newton_gauge",
         "analyze", "--poly", "x^6+2*x^3+8", "--prime", "2", "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == EXIT_OK
    report = json.loads(proc.stdout)
    assert report["certificate"]["theorem"] == "TB"

    proc = subprocess.run(
        [sys.executable, "-m", "newton_gauge",
         "analyze", "--poly", "x^2+2", "--prime", "4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == EXIT_BAD_INPUT
    assert "4 is not prime" in proc.stderr


def test_console_script():
    exe = shutil.which("newton-gauge")
    assert exe is not None
    proc = subprocess.run(
        [exe, "verify", "--poly", "x^2+2", "--prime", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == EXIT_OK
    assert "verification      PASS" in proc.stdout
