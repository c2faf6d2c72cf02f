"""End-to-end tests of the affsurf command line."""

import json
import math
from pathlib import Path
from typing import Any

import numpy as np
import pytest

from affsurf import cli
from affsurf.codecs import JSONCodec, dump_body
from affsurf.constants import ExitCode
from affsurf.geometry import Ellipsoid
from affsurf.models import Report

pytestmark = pytest.mark.integration


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str]:
    """Exit code and stdout of one command, without the test's own progress lines."""
    capsys.readouterr()
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def reject_constant(token: str) -> None:
    raise AssertionError(f"non-standard JSON constant {token}")


def payload_of(out: str) -> dict[str, Any]:
    """Payload of a strict-JSON report, with non-finite values restored."""
    raw = json.loads(out, parse_constant=reject_constant)
    assert set(raw) == {"kind", "schema_version", "payload", "fingerprint"}
    report = JSONCodec().decode(out.encode("utf-8"))
    assert isinstance(report, Report)
    return dict(report.payload)


def test_asp_command(capsys: pytest.CaptureFixture[str]) -> None:
    """Test as_p reports for standard bodies."""
    print("Testing the asp command...")

    code, out = run(capsys, "asp", "--body", "disk", "--p", "1")
    assert code == ExitCode.OK
    payload = payload_of(out)
    assert payload["value"] == pytest.approx(2.0 * math.pi)
    assert payload["method"] == "closed_form"

    code, out = run(capsys, "asp", "--body", "square", "--p", "-1")
    assert code == ExitCode.OK
    assert payload_of(out)["value"] == math.inf

    code, out = run(capsys, "asp", "--body", "ellipse21", "--p", "1", "--method", "quadrature")
    assert code == ExitCode.OK
    assert payload_of(out)["value"] == pytest.approx(2.0 * math.pi * 2.0 ** (1.0 / 3.0), rel=1e-8)
    print("✓ asp command test passed")


def test_body_file_and_csv(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Test a body read from a JSON file with CSV output."""
    print("Testing body files on the command line...")

    path = tmp_path / "ellipse.json"
    dump_body(Ellipsoid(np.zeros(2), np.diag([0.25, 1.0]), "file-ellipse"), path)
    code, out = run(capsys, "asp", "--body", str(path), "--p", "0", "--format", "csv")
    assert code == ExitCode.OK
    header, row = out.strip().splitlines()
    values = dict(zip(header.split(","), row.split(","), strict=True))
    assert values["body_id"] == "file-ellipse"
    assert float(values["value"]) == pytest.approx(4.0 * math.pi, rel=1e-5)
    print("✓ Body file test passed")


def test_extremal_command(capsys: pytest.CaptureFixture[str]) -> None:
    """Test closed-form, exact and witness-sequence extremal reports."""
    print("Testing the extremal command...")

    code, out = run(capsys, "extremal", "--kind", "IS", "--p", "3", "--body", "square")
    assert code == ExitCode.OK
    payload = payload_of(out)
    assert payload["value"] == math.inf
    assert payload["semantics"] == "limit"

    code, out = run(capsys, "extremal", "--kind", "IS", "--p", "1", "--body", "ellipse21", "--perturb", "0.05")
    assert code == ExitCode.OK
    payload = payload_of(out)
    assert payload["semantics"] == "exact"
    assert payload["perturbation"]["passed"]

    code, out = run(capsys, "extremal", "--kind", "os", "--p", "1", "--body", "square", "--probe")
    assert code == ExitCode.OK
    assert payload_of(out)["value"] == 0.0
    print("✓ extremal command test passed")


def test_quermass_table(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the rich table rendering."""
    print("Testing table output...")

    code, out = run(capsys, "quermass", "--body", "square", "--format", "table")
    assert code == ExitCode.OK
    assert "W_0" in out
    assert "square" in out
    print("✓ Table output test passed")


def test_verify_command(capsys: pytest.CaptureFixture[str]) -> None:
    """Test a verification suite run from the command line."""
    print("Testing the verify command...")

    code, out = run(capsys, "verify", "degenerate")
    assert code == ExitCode.OK
    payload = payload_of(out)
    assert payload["suite"] == "degenerate"
    assert payload["failed"] == 0

    code, out = run(capsys, "verify", "equivariance", "--trials", "2", "--seed", "1")
    assert code == ExitCode.OK
    payload = payload_of(out)
    assert payload["checked"] == 6
    assert payload["failed"] == 0
    print("✓ verify command test passed")


def test_exit_codes(capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch) -> None:
    """Test input, domain and bound-violation exit codes."""
    print("Testing exit codes...")

    input_errors = [
        ("asp", "--body", "disk"),
        ("asp", "--body", "dodecahedron", "--p", "1"),
        ("asp", "--body", "disk", "--p", "1", "--tol", "speed=1"),
        ("asp", "--body", "disk", "--p", "2", "--method", "floating"),
        ("floating", "--body", "square", "--delta", "0.7"),
        ("extremal", "--kind", "IS", "--p", "1", "--body", "square", "--probe"),
        ("santalo", "--body", "cube3"),
        ("asp", "--body", "disk", "--p", "1", "--samples", "0"),
    ]
    for argv in input_errors:
        code, _ = run(capsys, *argv)
        assert code == ExitCode.INPUT_ERROR, argv

    code, _ = run(capsys, "asp", "--body", "square", "--p", "-2")
    assert code == ExitCode.DOMAIN_ERROR

    monkeypatch.setattr(cli, "cmd_mvee", lambda args, cfg: ({"body_id": args.body.label}, False))
    code, out = run(capsys, "mvee", "--body", "square")
    assert code == ExitCode.BOUND_VIOLATION
    assert payload_of(out)["body_id"] == "square"
    print("✓ Exit codes test passed")
