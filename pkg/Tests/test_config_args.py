import pytest

from config_args import JOBS_ENV_VAR, ConfigArgs


@pytest.fixture(autouse=True)
def no_env_jobs(monkeypatch):
    monkeypatch.delenv(JOBS_ENV_VAR, raising=False)


def test_repository_defaults():
    config = ConfigArgs()
    assert config.get("split") is None
    assert config.get("use_reversal") is True
    assert config.get("max_twisted_rank") == 8
    assert config.get("box_margin") == 2
    assert config.get("chain_samples") == 8
    assert config.get("seed") == 42
    assert config.get("max_oracle_rank") == 4
    assert config.get("pretty") is False
    assert config.get("jobs") == 1
    assert config.get("unknown") is None


def test_missing_file_uses_fallbacks(tmp_path):
    config = ConfigArgs(config_path=str(tmp_path / "absent.ini"))
    assert config.get("max_twisted_rank") == 8
    assert config.get("progress") is True


def test_file_values_are_typed(config_file):
    path = config_file(
        "[enumeration]\nsplit = 3\nuse_reversal = False\n[runtime]\njobs = 4\n"
    )
    config = ConfigArgs(config_path=path)
    assert config.get("split") == 3
    assert config.get("use_reversal") is False
    assert config.get("jobs") == 4


def test_overrides_beat_file_and_none_is_ignored(config_file):
    path = config_file("[runtime]\njobs = 4\n[output]\npretty = True\n")
    config = ConfigArgs(config_path=path, overrides={"jobs": 2, "pretty": None})
    assert config.get("jobs") == 2
    assert config.get("pretty") is True


def test_environment_beats_overrides(monkeypatch):
    monkeypatch.setenv(JOBS_ENV_VAR, "6")
    assert ConfigArgs(overrides={"jobs": 2}).get("jobs") == 6


def test_non_integer_environment_is_ignored(monkeypatch):
    monkeypatch.setenv(JOBS_ENV_VAR, "many")
    assert ConfigArgs(overrides={"jobs": 3}).get("jobs") == 3


def test_non_positive_jobs_rejected():
    with pytest.raises(ValueError):
        ConfigArgs(overrides={"jobs": 0})


def test_repr_shows_mapping():
    assert "'max_twisted_rank': 8" in repr(ConfigArgs())
