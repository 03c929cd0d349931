import math

import jsonschema
import numpy as np
import pytest

from hyperspec import report
from hyperspec.cli import run
from hyperspec.families import bowtie, complete_uniform
from hyperspec.hgio import format_hg


@pytest.fixture(scope="module")
def validator():
    schema = report.schema()
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def test_plain_conversions():
    out = report.plain({"a": np.float64(1.5), "b": np.arange(3), "c": frozenset({2, 1}),
                        "d": math.inf, "e": np.bool_(True), "f": (np.int64(4),)})
    assert out == {"a": 1.5, "b": [0, 1, 2], "c": [1, 2], "d": None, "e": True, "f": [4]}


def test_json_round_trip_exact():
    vals = [0.1, 1 / 3, 2.0 ** -40, 1e300, -0.0, 123456789.123456789]
    rep = report.envelope("spectrum", [], {}, "-", b"", {"kind": "spectrum", "eigenvalues": vals})
    back = report.from_json(report.to_json(rep))
    assert back["payload"]["eigenvalues"] == vals
    assert report.to_json(back) == report.to_json(rep)


def test_keys_sorted_and_stable():
    rep = report.envelope("cheeger", ["x"], {"b": 1, "a": 2}, "-", b"data", {"kind": "cheeger"})
    text = report.to_json(rep)
    assert text.index('"argv"') < text.index('"command"') < text.index('"tool"')
    assert rep["input"]["sha256"] == report.digest(b"data")


@pytest.mark.parametrize("argv", [
    ["spectrum", "--matrix", "adjacency"],
    ["spectrum", "--matrix", "transition"],
    ["audit"],
    ["audit", "--bounds", "LAP-7", "--v1", "1,2", "--v2", "4,5"],
    ["cheeger", "--measure", "volume"],
    ["walk", "--steps", "20", "--seed", "3"],
    ["walk", "--certificate", "5"],
    ["curvature", "--ollivier", "--plans"],
    ["curvature", "--scalar"],
    ["curvature", "--cd", "2", "-0.5"],
    ["curvature", "--best-k", "inf"],
    ["curvature", "--audit"],
])
def test_cli_reports_validate(tmp_path, validator, argv):
    path = tmp_path / "t.hg"
    path.write_text(format_hg(bowtie()))
    status, out, err = run(argv + ["--input", str(path)])
    assert status == 0, err
    validator.validate(report.from_json(out))


def test_schema_rejects_tampered_report(tmp_path, validator):
    path = tmp_path / "k.hg"
    path.write_text(format_hg(complete_uniform(4, 3)))
    _, out, _ = run(["audit", "--bounds", "ADJ-1", "--input", str(path)])
    rep = report.from_json(out)
    rep["payload"]["reports"][0]["verdict"] = "maybe"
    with pytest.raises(jsonschema.ValidationError):
        validator.validate(rep)
    rep = report.from_json(out)
    rep["tool"] = "other"
    with pytest.raises(jsonschema.ValidationError):
        validator.validate(rep)


def test_csv_and_text(tmp_path):
    path = tmp_path / "t.hg"
    path.write_text(format_hg(complete_uniform(4, 3)))
    _, out, _ = run(["spectrum", "--format", "csv", "--input", str(path)])
    lines = out.strip().splitlines()
    assert lines[0] == "index,eigenvalue"
    assert len(lines) == 5
    _, text, _ = run(["cheeger", "--format", "text", "--input", str(path)])
    assert "value" in text


def test_float_types_survive():
    rep = report.envelope("walk", [], {}, "-", b"", {"kind": "walk", "x": 2.0, "n": 2})
    back = report.from_json(report.to_json(rep))["payload"]
    assert isinstance(back["x"], float) and isinstance(back["n"], int)
