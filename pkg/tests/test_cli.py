# -*- coding: utf-8 -*-
"""Tests for the ringrank command line."""

from __future__ import unicode_literals

import io
import json

import pytest

from ringrank import cli
from ringrank import schema
from ringrank.errors import InvariantViolation


def _analyze(capsys, path):
    code = cli.main(["analyze", str(path), "--deterministic"])
    return code, json.loads(capsys.readouterr().out)


def _write_job(tmp_path, document, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(document))
    return path


def test_construct_then_analyze_order(tmp_path, capsys):
    """Test that an emitted construction analyzes to its known rank."""
    path = tmp_path / "matson3.json"
    assert cli.main(["construct", "matson", "3", "--emit", str(path)]) == 0
    capsys.readouterr()
    code, report = _analyze(capsys, path)
    assert code == 0
    assert report["kind"] == "order-report"
    assert report["rank"] == 3
    assert report["exact"] is True
    assert report["index_in_normalization"] == "4"
    assert [p["z"] for p in report["singular_primes"]] == [3]
    assert report["witness"]["local_generators"] == 3
    assert all(check["passed"] for check in report["checks"])
    assert "generated_at" not in report


def test_construct_pullback(tmp_path, capsys):
    """Test the pullback construction with its primes option."""
    path = tmp_path / "pullback.json"
    code = cli.main(
        [
            "construct",
            "pullback-poly",
            "1",
            "0",
            "1",
            "--primes",
            "3,7",
            "--emit",
            str(path),
        ]
    )
    assert code == 0
    capsys.readouterr()
    code, report = _analyze(capsys, path)
    assert code == 0
    assert report["rank"] == 2
    assert sorted(p["p"] for p in report["singular_primes"]) == [3, 7]


def test_analyze_finring(tmp_path, capsys):
    """Test the report of a finite ring given by its table."""
    path = _write_job(
        tmp_path,
        {
            "kind": "finring",
            "id": "Z/8",
            "divisors": [8],
            "table": [[[1]]],
            "one": [1],
        },
    )
    code, report = _analyze(capsys, path)
    assert code == 0
    assert report["ring_id"] == "Z/8"
    assert report["rank"] == 1
    assert report["length"] == 3
    assert report["nilpotency"] == {"elementwise": 3, "idealwise": 3}
    assert report["maximal_ideals"][0]["residue_size"] == "2"


def test_analyze_rank_above_cap(tmp_path, capsys):
    """Test that the exhaustive rank is null above the size cap."""
    path = tmp_path / "trunc.json"
    cli.main(["construct", "trunc-poly", "2", "2", "2", "--emit", str(path)])
    capsys.readouterr()
    code = cli.main(
        ["--max-ring-size", "8", "analyze", str(path), "--deterministic"]
    )
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["rank"] is None
    assert report["length"] == 4


def test_analyze_normal_order(tmp_path, capsys):
    """Test that an order without a suborder basis is reported normal."""
    path = _write_job(tmp_path, {"kind": "order", "minpoly": [1, 0, 1]})
    code, report = _analyze(capsys, path)
    assert code == 0
    assert report["normal"] is True
    assert report["rank"] == {"interval": [1, 2]}
    assert report["exact"] is False


def test_analyze_from_stdin(monkeypatch, capsys):
    """Test that - reads the job from standard input."""
    monkeypatch.setattr(
        "sys.stdin",
        io.StringIO('{"kind": "construction", "name": "cyclic", "args": [9]}'),
    )
    code = cli.main(["analyze", "-", "--deterministic"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["length"] == 2


def test_deterministic_output_is_stable(tmp_path, capsys):
    """Test that two deterministic runs print the same bytes."""
    path = _write_job(
        tmp_path, {"kind": "construction", "name": "cor43", "args": [2]}
    )
    cli.main(["analyze", str(path), "--deterministic"])
    first = capsys.readouterr().out
    cli.main(["analyze", str(path), "--deterministic"])
    assert capsys.readouterr().out == first
    cli.main(["analyze", str(path)])
    assert "generated_at" in json.loads(capsys.readouterr().out)


@pytest.mark.parametrize(
    "document",
    [
        {"kind": "order"},
        {"kind": "order", "minpoly": [1, 0, 1], "normalization": "computed"},
        {"kind": "finring", "divisors": [8]},
        {"kind": "construction", "name": "moebius"},
        {"kind": "construction", "name": "matson", "args": [1]},
        {
            "kind": "order",
            "minpoly": [-2, 0, 0, 1],
            "suborder_basis": [[1, 0, 0], [0, 1, 0], [0, 0, 2]],
        },
        {"kind": "finring", "divisors": [4], "table": [[[1]]], "one": [2]},
    ],
)
def test_analyze_input_errors(tmp_path, capsys, document):
    """Test that invalid jobs exit with 2 and an error report."""
    code, report = _analyze(capsys, _write_job(tmp_path, document))
    assert code == 2
    assert report["kind"] == "error"
    assert report["error"]["exit_code"] == 2


def test_analyze_bad_json_and_missing_file(tmp_path, capsys):
    """Test unreadable jobs."""
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, report = _analyze(capsys, path)
    assert code == 2
    assert report["error"]["type"] == "SchemaError"
    code, report = _analyze(capsys, tmp_path / "absent.json")
    assert code == 2


def test_analyze_computation_error(tmp_path, capsys, monkeypatch):
    """Test that computation errors exit with 3."""

    def fail(*args, **kwargs):
        raise InvariantViolation("z_p exceeds e_p")

    monkeypatch.setattr(cli, "report_order", fail)
    path = _write_job(tmp_path, {"kind": "order", "minpoly": [1, 0, 1]})
    code, report = _analyze(capsys, path)
    assert code == 3
    assert report["error"]["type"] == "InvariantViolation"


def test_analyze_failed_tangent_check(tmp_path, capsys, monkeypatch):
    """Test that a disagreeing dim P/P^2 cross-check exits with 3."""
    monkeypatch.setattr(schema, "tangent_dimension", lambda *args: 0)
    path = _write_job(
        tmp_path, {"kind": "construction", "name": "matson", "args": [2]}
    )
    code, report = _analyze(capsys, path)
    assert code == 3
    assert report["checks"][0]["passed"] is False


def test_construct_errors(tmp_path, capsys):
    """Test exit codes of invalid constructions."""
    emit = str(tmp_path / "out.json")
    assert cli.main(["construct", "matson", "1", "--emit", emit]) == 2
    assert cli.main(["construct", "cyclic", "--emit", emit]) == 2
    axs = ["construct", "axs-poly", "1", "0", "1", "--emit", emit]
    assert cli.main(axs) == 2
    assert cli.main(["construct", "nonsense", "--emit", emit]) == 2
    assert not (tmp_path / "out.json").exists()


def test_construct_to_stdout(capsys):
    """Test that - writes the job to standard output."""
    assert cli.main(["construct", "cyclic", "4", "--emit", "-"]) == 0
    job = json.loads(capsys.readouterr().out)
    assert job == {
        "kind": "finring",
        "divisors": [4],
        "table": [[[1]]],
        "one": [1],
    }


def test_demo_filter(capsys):
    """Test a filtered demo run and its summary line."""
    assert cli.main(["demo", "--filter", "matson-2", "--deterministic"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("PASS matson-2 [published:")
    assert lines[-1] == "1 checks run, 0 failed"


def test_demo_filter_without_matches(capsys, caplog):
    """Test that an empty selection passes with a warning."""
    code = cli.main(
        ["demo", "--filter", "nonexistent-filter", "--deterministic"]
    )
    assert code == 0
    assert capsys.readouterr().out == "0 checks run, 0 failed\n"
    assert "No checks match" in caplog.text


def test_demo_failure_exit_code(capsys, monkeypatch):
    """Test that a failing check exits with 1."""
    from ringrank import demo

    check = demo.Check(
        name="always-wrong",
        citation="1 is not 2",
        provenance=demo.DERIVED,
        expected=2,
        compute=lambda: 1,
    )
    monkeypatch.setattr(demo, "catalog", lambda: (check,))
    assert cli.main(["demo", "--deterministic"]) == 1
    out = capsys.readouterr().out
    assert "FAIL always-wrong: expected (derived: 1 is not 2) 2, got 1" in out


def test_usage_errors(capsys):
    """Test that argument errors exit with 2."""
    assert cli.main([]) == 2
    assert cli.main(["--max-ring-size", "0", "demo"]) == 2
    assert cli.main(["construct", "cyclic", "x", "--emit", "-"]) == 2
