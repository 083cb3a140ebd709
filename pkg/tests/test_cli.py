import json
from importlib import import_module
from pathlib import Path
from typing import Any

import pytest
from typer.testing import CliRunner

from catalan_toolkit.common import OutputRecord, RecordKind
from catalan_toolkit.main import app
from catalan_toolkit.verify.claims import ClaimId, Counterexample, SweepConfig, VerificationReport

runner = CliRunner()


def _records(stdout: str) -> list[dict]:
    return [json.loads(line) for line in stdout.splitlines() if line.startswith("{")]


def test_version() -> None:
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0


def test_compute_triangle_csv() -> None:
    result = runner.invoke(app, ["compute", "triangle", "--rows", "6", "--format", "csv"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "k0,k1,k2,k3,k4,k5,k6"
    assert lines[1:] == [
        "1",
        "1,1",
        "1,2,2",
        "1,3,5,5",
        "1,4,9,14,14",
        "1,5,14,28,42,42",
        "1,6,20,48,90,132,132",
    ]
    assert result.stdout.endswith("\n")


def test_compute_triangle_json() -> None:
    result = runner.invoke(app, ["compute", "triangle", "--rows", "2"])
    assert result.exit_code == 0
    assert _records(result.stdout) == [
        {"kind": "table", "object": "triangle", "params": {"rows": "2"}, "rows": [["1"], ["1", "1"], ["1", "2", "2"]]},
    ]


@pytest.mark.parametrize(
    ("args", "value"),
    [
        (["ssum", "--n", "2", "--m", "1"], "66"),
        (["ssum", "--n", "2", "--m", "2"], "1152"),
        (["ssum", "--n", "1", "--m", "1", "--kernel", "Q", "--a", "1"], "-2"),
        (["schr", "--n", "1", "--m", "5", "--j", "1", "--l", "2"], "4"),
        (["schr-closed", "--n", "2", "--m", "4", "--j", "1", "--l", "2"], "5"),
        (["schr-total", "--n", "2", "--m", "4", "--l", "2"], "10"),
        (["msum", "--n", "2", "--j", "0", "--t", "1"], "-12"),
        (["msum", "--kernel", "Q", "--a", "2", "--n", "4", "--j", "1"], "36"),
        (["tnum", "--n", "2", "--j", "1"], "5"),
        (["catalan", "--n", "4"], "14"),
        (["fuss3", "--n", "4"], "55"),
        (["central", "--n", "4"], "70"),
    ],
)
def test_compute_scalars(args: list[str], value: str) -> None:
    result = runner.invoke(app, ["compute", *args])
    assert result.exit_code == 0
    records = _records(result.stdout)
    assert len(records) == 1
    assert records[0]["kind"] == "sequence"
    assert records[0]["object"] == args[0]
    assert records[0]["value"] == value


def test_compute_scalar_csv() -> None:
    result = runner.invoke(app, ["compute", "tnum", "--n", "2", "--j", "1", "--format", "csv"])
    assert result.exit_code == 0
    assert result.stdout == "object,n,j,value\ntnum,2,1,5\n"


def test_compute_sequence_listing() -> None:
    result = runner.invoke(app, ["compute", "catalan", "--rows", "4", "--format", "csv"])
    assert result.exit_code == 0
    assert result.stdout == "n,value\n0,1\n1,1\n2,2\n3,5\n4,14\n"


def test_compute_paths() -> None:
    result = runner.invoke(app, ["compute", "paths", "--n", "1", "--m", "2", "--l", "2"])
    assert result.exit_code == 0
    record = _records(result.stdout)[0]
    assert record["paths"] == ["ND", "NNE"]
    assert record["count"] == "2"


def test_compute_paths_over_the_cap() -> None:
    result = runner.invoke(
        app,
        ["compute", "paths", "--n", "4", "--m", "4", "--steps", "EN", "--boundary", "never_above_y_eq_x_over_l", "--cap", "5"],
    )
    assert result.exit_code == 2


@pytest.mark.parametrize(
    "args",
    [
        ["bogus"],
        ["tnum", "--n", "2"],
        ["tnum", "--n", "2", "--j", "3"],
        ["msum", "--n", "3", "--j", "0"],
        ["ssum", "--n", "two", "--m", "1"],
        ["schr-closed", "--n", "2", "--m", "3", "--j", "0", "--l", "2"],
        ["triangle"],
        ["paths", "--n", "1", "--m", "1", "--steps", "EX"],
    ],
)
def test_compute_usage_errors(args: list[str]) -> None:
    result = runner.invoke(app, ["compute", *args])
    assert result.exit_code == 2
    assert _records(result.stdout) == []


def test_compute_domain_error_shows_usage() -> None:
    result = runner.invoke(app, ["compute", "tnum", "--n", "2", "--j", "3"])
    assert result.exit_code == 2
    assert "Usage" in result.output
    assert "Cannot compute tnum" in result.output


def test_verify_single_claim() -> None:
    result = runner.invoke(app, ["verify", "THM1", "--n-max", "30", "--quiet"])
    assert result.exit_code == 0
    records = _records(result.stdout)
    assert len(records) == 1
    assert records[0]["kind"] == "report"
    assert records[0]["claim"] == "THM1"
    assert records[0]["verdict"] == "pass"
    assert records[0]["instances"] == "31"
    assert records[0]["counterexamples"] == []


def test_verify_divisibility_csv() -> None:
    result = runner.invoke(app, ["verify", "THM2", "--n-max", "20", "--m-max", "5", "--format", "csv", "--quiet"])
    assert result.exit_code == 0
    lines = [line for line in result.stdout.splitlines() if line.startswith(("claim,", "THM2,"))]
    assert lines[0] == "claim,verdict,instances,counterexamples,elapsed,params,check,expected,actual"
    assert lines[1].startswith("THM2,pass,105,0,")
    assert lines[1].endswith(",,,,")


def test_verify_csv_lists_every_counterexample(monkeypatch: pytest.MonkeyPatch) -> None:
    report = VerificationReport(ClaimId.THM1, {"n": (0, 3)}, instances=4, elapsed=0.25)
    report.counterexamples.append(Counterexample({"n": 2}, "check", "10", "11"))
    report.counterexamples.append(Counterexample({"n": 3}, "check", "20", "21"))

    def fake_run_all(_config: SweepConfig, _claims: list[ClaimId], **kwargs: Any) -> list[VerificationReport]:  # noqa: ANN401
        kwargs["on_report"](report)
        return [report]

    monkeypatch.setattr(import_module("catalan_toolkit.verify.verify"), "run_all", fake_run_all)
    result = runner.invoke(app, ["verify", "THM1", "--format", "csv", "--quiet"])
    assert result.exit_code == 1
    assert result.stdout.splitlines()[-3:] == [
        "claim,verdict,instances,counterexamples,elapsed,params,check,expected,actual",
        "THM1,fail,4,2,0.250,n=2,check,10,11",
        "THM1,fail,4,2,0.250,n=3,check,20,21",
    ]


def test_verify_all_small_ranges() -> None:
    result = runner.invoke(
        app,
        ["verify", "all", "--n-max", "3", "--m-max", "2", "--t-max", "3", "--a-max", "2", "--l", "1", "--l", "2"],
    )
    assert result.exit_code == 0
    records = _records(result.stdout)
    assert len(records) == 20
    assert {r["verdict"] for r in records} == {"pass"}


def test_verify_comma_separated_claims() -> None:
    result = runner.invoke(app, ["verify", "EQ7,thm1", "--n-max", "4", "--quiet"])
    assert result.exit_code == 0
    assert [r["claim"] for r in _records(result.stdout)] == ["THM1", "EQ7"]


def test_verify_unknown_claim() -> None:
    result = runner.invoke(app, ["verify", "THM9"])
    assert result.exit_code == 2
    assert _records(result.stdout) == []


def test_verify_seed_manifest() -> None:
    result = runner.invoke(app, ["verify", "--seed-manifest"])
    assert result.exit_code == 0
    records = _records(result.stdout)
    assert len(records) == 20
    assert records[0] == {"kind": "table", "claim": "THM1", "statement": "S(2n,1) = (-1)^n C3_n C_n (2n^2+n+1)"}


def test_oeis_check_fuss_catalan() -> None:
    result = runner.invoke(app, ["oeis-check", "A001764", "--n-max", "10"])
    assert result.exit_code == 0
    record = _records(result.stdout)[0]
    assert record["oeis_id"] == "A001764"
    assert record["compared"] == "11"
    assert record["matches"] == "true"
    assert record["truncated"] == "false"


def test_oeis_check_catalan_prefix() -> None:
    result = runner.invoke(app, ["oeis-check", "A000108", "--n-max", "4", "--quiet"])
    assert result.exit_code == 0
    assert _records(result.stdout)[0]["compared"] == "5"


def test_oeis_check_all_truncated() -> None:
    result = runner.invoke(app, ["oeis-check", "all", "--n-max", "500", "--quiet"])
    assert result.exit_code == 0
    records = _records(result.stdout)
    assert [r["oeis_id"] for r in records] == ["A000108", "A001764", "A000984"]
    assert {r["truncated"] for r in records} == {"true"}
    assert {r["compared"] for r in records} == {"101"}


def test_oeis_check_mismatch(tmp_path: Path) -> None:
    (tmp_path / "A000108.bfile").write_text("0 1\n1 1\n2 3\n", encoding="utf-8")
    result = runner.invoke(app, ["oeis-check", "A000108", "--data-dir", str(tmp_path), "--quiet"])
    assert result.exit_code == 1
    record = _records(result.stdout)[0]
    assert record["mismatches"] == [{"index": "2", "expected": "3", "actual": "2"}]


def test_oeis_check_missing_snapshot(tmp_path: Path) -> None:
    result = runner.invoke(app, ["oeis-check", "A000984", "--data-dir", str(tmp_path)])
    assert result.exit_code == 2


def test_oeis_check_undecodable_snapshot(tmp_path: Path) -> None:
    (tmp_path / "A000108.bfile").write_bytes(b"0 1\n1 1\n\xff\xfe 2\n")
    result = runner.invoke(app, ["oeis-check", "A000108", "--data-dir", str(tmp_path)])
    assert result.exit_code == 2
    assert _records(result.stdout) == []


def test_oeis_check_unknown_sequence() -> None:
    result = runner.invoke(app, ["oeis-check", "A999999"])
    assert result.exit_code == 2


def test_output_record_round_trip() -> None:
    value = 3**200
    record = OutputRecord(RecordKind.SEQUENCE, {"object": "x", "value": value, "flag": True, "rows": [[1, -2]]})
    line = record.to_json()
    assert "\n" not in line
    assert str(value) in line
    decoded = OutputRecord.from_json(line)
    assert decoded.kind == RecordKind.SEQUENCE
    assert decoded.payload == {"object": "x", "value": str(value), "flag": "true", "rows": [["1", "-2"]]}
    assert OutputRecord.from_json(decoded.to_json()) == decoded
