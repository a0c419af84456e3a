# coding=utf-8
"""Config file, environment overrides and run parameter validation"""

import pytest

from permcensus.core.config import RunConfig, validate_degree, validate_distance
from permcensus.core.loader import load_config
from permcensus.utils.errors import InvalidParameterError


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for key in ("PERMCENSUS_CONFIG", "PERMCENSUS_JOBS", "PERMCENSUS_MAX_NODES", "PERMCENSUS_MAX_SECONDS",
                "PERMCENSUS_TIMEZONE", "PERMCENSUS_OUTPUT_DIR", "PERMCENSUS_FORMAT"):
        monkeypatch.delenv(key, raising=False)


def test_defaults_without_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = load_config()
    assert config["TIMEZONE"] == "UTC"
    assert config["SEARCH"]["JOBS"] == 1
    assert config["SEARCH"]["MAX_NODES"] == 0
    assert config["FORMAT"] == "text"
    assert config["ORACLE"]["MAX_ISOMETRY_DEGREE"] == 5
    assert config["ORACLE"]["MAX_STABILIZER_DEGREE"] == 4


def test_file_then_environment(tmp_path, monkeypatch):
    path = tmp_path / "config.yaml"
    path.write_text("search:\n  jobs: 3\n  max_nodes: 100\noutput:\n  format: json\n", encoding="utf-8")
    config = load_config(str(path))
    assert config["SEARCH"]["JOBS"] == 3
    assert config["FORMAT"] == "json"

    monkeypatch.setenv("PERMCENSUS_JOBS", "6")
    monkeypatch.setenv("PERMCENSUS_MAX_NODES", "lots")
    config = load_config(str(path))
    assert config["SEARCH"]["JOBS"] == 6
    # unparsable values fall back to the file
    assert config["SEARCH"]["MAX_NODES"] == 100


def test_explicit_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(str(tmp_path / "absent.yaml"))


def test_flags_override_config():
    config = {"SEARCH": {"JOBS": 4, "MAX_NODES": 10}, "FORMAT": "csv"}
    run = RunConfig.from_config("enumerate", config, n=4, d=3, jobs=None, output_format="json")
    assert run.jobs == 4
    assert run.max_nodes == 10
    assert run.output_format == "json"
    assert run.validate(require=("n", "d")) is run


@pytest.mark.parametrize("overrides", [
    {"n": 2, "d": 2},
    {"n": 4, "d": 5},
    {"n": 4, "d": 1},
    {"n": 4, "d": 3, "jobs": 0},
    {"n": 4, "d": 3, "max_nodes": -1},
    {"n": 4, "d": 3, "algorithm": "dfs"},
    {"n": 4, "d": 3, "max_size": 0},
])
def test_invalid_runs(overrides):
    with pytest.raises(InvalidParameterError):
        RunConfig.from_config("enumerate", {}, **overrides).validate(require=("n", "d"))


def test_required_parameters():
    with pytest.raises(InvalidParameterError):
        RunConfig("balanced", n=4, d=3).validate(require=("n", "d", "r"))
    with pytest.raises(InvalidParameterError):
        RunConfig("slice", n=4, d=3).validate(require=("n", "d", "size"))
    with pytest.raises(InvalidParameterError):
        validate_distance(4, None)
    assert validate_degree(16) == 16


def test_parameters_omit_runtime_knobs():
    run = RunConfig.from_config("enumerate", {}, n=4, d=3, jobs=2, out_dir="x")
    params = run.parameters()
    assert params["n"] == 4
    assert "jobs" not in params
    assert "out_dir" not in params
