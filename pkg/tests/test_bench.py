"""Config parsing, emission determinism, presets, and the CLI."""

import json
import math

import pytest

from pscomp.bench import (
    ExperimentConfig, ResultTable, apply_overrides, emit, parse_config,
    preset_config, run_preset,
)
from pscomp.bench.cli import main
from pscomp.errors import ValidationError


def test_parse_empty_document_uses_preset_defaults():
    config = parse_config("", preset="kepler-order")
    assert config.problem == "kepler"
    assert config.problem_params["e"] == 0.6
    assert config.t_final == 20.0
    assert config.tau_list[0] == pytest.approx(20.0 / 250.0)


def test_parse_rejects_unknown_keys():
    with pytest.raises(ValidationError, match="unknown config keys: colour, speed"):
        parse_config('{"colour": 1, "speed": 2}', preset="kepler-order")


def test_parse_rejects_increasing_tau_list():
    with pytest.raises(ValidationError, match="decreasing"):
        parse_config('{"tau_list": [0.1, 0.2]}', preset="kepler-order")


def test_parse_rejects_bad_grid():
    with pytest.raises(ValidationError, match="power of two"):
        parse_config('{"grid_points": 100}', preset="fisher-order")


def test_parse_rejects_non_multiple_t_final():
    with pytest.raises(ValidationError, match="integer multiple"):
        parse_config('{"tau_list": [0.3], "t_final": 1.0}', preset="kepler-order")


def test_parse_rejects_preset_mismatch():
    with pytest.raises(ValidationError, match="was requested"):
        parse_config('{"preset": "cgl-order"}', preset="kepler-order")


def test_parse_uses_document_preset():
    config = parse_config('{"preset": "fisher-order"}')
    assert config.problem == "fisher"
    assert config.grid_points == 128


def test_parse_requires_some_preset():
    with pytest.raises(ValidationError, match="preset"):
        parse_config("{}")


def test_parse_merges_problem_params():
    config = parse_config('{"problem_params": {"e": 0.3}}', preset="kepler-order")
    assert config.problem_params == {"e": 0.3}
    config = parse_config('{"problem_params": {"c1": 0.5}}', preset="cgl-order")
    assert config.problem_params["c1"] == 0.5
    assert config.problem_params["c3"] == -2.0


def test_config_levels_range():
    with pytest.raises(ValidationError, match="levels"):
        ExperimentConfig(problem="kepler", levels=5)
    with pytest.raises(ValidationError):
        ExperimentConfig(problem="nosuch")


def test_apply_overrides_keeps_validation():
    base = preset_config("fisher-order")
    config = apply_overrides(base, {"grid_points": 64, "levels": 1})
    assert config.grid_points == 64
    with pytest.raises(ValidationError):
        apply_overrides(base, {"nonsense": True})


def test_emit_header_only(tmp_path):
    table = ResultTable(schema=["a", "b"], metadata={"x": 1})
    csv_path, json_path = emit(table, str(tmp_path / "empty"))
    assert open(csv_path).read() == "a,b\n"
    assert json.load(open(json_path)) == {"x": 1}


def test_emit_formats_cells(tmp_path):
    table = ResultTable(schema=["name", "count", "value", "flag", "missing"])
    table.add_row(name="row", count=3, value=math.nan, flag=True)
    csv_path, _ = emit(table, str(tmp_path / "cells"))
    lines = open(csv_path).read().splitlines()
    assert lines[1] == "row,3,nan,true,"


def test_emit_uses_lf_endings(tmp_path):
    table = ResultTable(schema=["a"])
    table.add_row(a=1.0)
    csv_path, _ = emit(table, str(tmp_path / "lf"))
    raw = open(csv_path, "rb").read()
    assert b"\r" not in raw


def test_emit_17_significant_digits(tmp_path):
    table = ResultTable(schema=["v"])
    table.add_row(v=1.0 / 3.0)
    csv_path, _ = emit(table, str(tmp_path / "digits"))
    cell = open(csv_path).read().splitlines()[1]
    assert cell == "3.3333333333333331e-01"


def test_rerun_is_byte_identical(tmp_path):
    first = tmp_path / "one"
    second = tmp_path / "two"
    for out in (first, second):
        run_preset("coeff-audit", out_dir=str(out))
    for name in ("coeff-audit.csv", "coeff-audit.json"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_run_preset_applies_overrides(tmp_path):
    table, paths = run_preset(
        "fisher-order",
        overrides={"tau_list": [0.1, 0.05], "grid_points": 32, "levels": 1},
        out_dir=str(tmp_path),
    )
    idx = {c: i for i, c in enumerate(table.schema)}
    methods = {r[idx["method"]] for r in table.rows}
    assert methods == {"strang", "level1"}
    snapshot = [p for p in paths if p.endswith("field.txt")]
    assert snapshot, "expected a field snapshot for PDE presets"


def test_run_preset_unknown_name():
    with pytest.raises(ValidationError, match="unknown preset"):
        run_preset("nope")


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "kepler-order" in out
    assert "coeff-audit" in out


def test_cli_run_coeff_audit(tmp_path, capsys):
    code = main(["run", "coeff-audit", "--out", str(tmp_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "coeff-audit.csv" in out
    assert (tmp_path / "coeff-audit.csv").exists()
    assert (tmp_path / "coeff-audit.json").exists()


def test_cli_run_with_config_overrides(tmp_path, capsys):
    config_path = tmp_path / "cfg.json"
    config_path.write_text(json.dumps(
        {"tau_list": [0.1, 0.05], "grid_points": 32, "levels": 1}
    ))
    code = main(["run", "fisher-order", "--config", str(config_path),
                 "--out", str(tmp_path)])
    assert code == 0
    data = json.load(open(tmp_path / "fisher-order.json"))
    assert data["config"]["grid_points"] == 32


def test_cli_validate_good_and_bad(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text('{"preset": "kepler-order", "levels": 2}')
    assert main(["validate", str(good)]) == 0

    bad = tmp_path / "bad.json"
    bad.write_text('{"preset": "kepler-order", "tau_list": [0.1, 0.2]}')
    assert main(["validate", str(bad)]) == 2
    assert "decreasing" in capsys.readouterr().err

    missing = tmp_path / "missing.json"
    assert main(["validate", str(missing)]) == 2


def test_cli_rejects_extended_precision(tmp_path, capsys):
    code = main(["run", "coeff-audit", "--out", str(tmp_path),
                 "--precision", "extended"])
    assert code == 2
    assert "extended" in capsys.readouterr().err


def test_cli_run_invalid_config_file(tmp_path, capsys):
    config_path = tmp_path / "broken.json"
    config_path.write_text('{"tau_list": [0.1, 0.2]}')
    code = main(["run", "kepler-order", "--config", str(config_path),
                 "--out", str(tmp_path)])
    assert code == 2


def test_preset_metadata_echoes_config(tmp_path):
    table, _ = run_preset("coeff-audit", out_dir=str(tmp_path))
    assert table.metadata["preset"] == "coeff-audit"
    assert table.metadata["precision"] == "f64"
    assert table.metadata["config"]["problem"] == "harmonic"


def test_order_preset_rows_and_slope(tmp_path):
    table, _ = run_preset(
        "fisher-order",
        overrides={"tau_list": [0.025, 0.0125, 0.00625], "grid_points": 32,
                   "levels": 1},
        out_dir=str(tmp_path),
    )
    idx = {c: i for i, c in enumerate(table.schema)}
    value_rows = [r for r in table.rows if r[idx["quantity"]] == "successive_error"]
    assert len(value_rows) == 2 * 3  # two methods, three steps
    fit_rows = [r for r in table.rows if r[idx["quantity"]] == "order_fit"]
    strang_slope = next(r[idx["slope"]] for r in fit_rows if r[idx["method"]] == "strang")
    assert strang_slope == pytest.approx(2.0, abs=0.4)
