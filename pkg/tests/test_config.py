import pytest
import yaml

from burau_forge.core.errors import ConfigurationError
from burau_forge.utils.config import ENV_LOG_LEVEL, ENV_THREADS, Settings, SettingsManager


def manager(tmp_path, data=None, environ=None) -> SettingsManager:
    path = tmp_path / "burau_forge.yaml"
    if data is not None:
        path.write_text(yaml.safe_dump(data))
    return SettingsManager(path, environ=environ or {})


def test_defaults_without_file(tmp_path):
    settings = manager(tmp_path).settings
    assert settings == Settings()
    assert settings.nf_max_len == 8
    assert settings.explore_step_budget == 200000
    assert settings.eigen_exponents == [-58854, 19618]
    assert settings.triangle_params == [2, 1]


def test_file_values(tmp_path):
    settings = manager(tmp_path, {"threads": 8, "explore_radius": 1, "triangle_params": [3, 1]}).settings
    assert settings.threads == 8
    assert settings.explore_radius == 1
    assert settings.triangle_params == [3, 1]
    assert settings.log_level == "INFO"


def test_empty_file(tmp_path):
    (tmp_path / "burau_forge.yaml").write_text("")
    assert SettingsManager(tmp_path / "burau_forge.yaml", environ={}).settings == Settings()


@pytest.mark.parametrize("data", [
    {"threads": 0},
    {"unknown_key": 1},
    {"eigen_exponents": [1]},
    {"log_level": "LOUD"},
    {"nf_max_len": "eight"},
])
def test_invalid_values(tmp_path, data):
    with pytest.raises(ConfigurationError):
        manager(tmp_path, data)


def test_invalid_yaml(tmp_path):
    (tmp_path / "burau_forge.yaml").write_text("threads: [1,\n")
    with pytest.raises(ConfigurationError):
        SettingsManager(tmp_path / "burau_forge.yaml", environ={})


def test_environment_overrides(tmp_path):
    settings = manager(tmp_path, {"threads": 8}, {ENV_THREADS: "3", ENV_LOG_LEVEL: "debug"}).settings
    assert settings.threads == 3
    assert settings.log_level == "DEBUG"


def test_bad_environment(tmp_path):
    with pytest.raises(ConfigurationError):
        manager(tmp_path, environ={ENV_THREADS: "many"})
    with pytest.raises(ConfigurationError):
        manager(tmp_path, environ={ENV_LOG_LEVEL: "chatty"})


def test_save_round_trip(tmp_path):
    mgr = manager(tmp_path, {"threads": 6})
    target = tmp_path / "nested" / "saved.yaml"
    mgr.save_settings(target)
    assert SettingsManager(target, environ={}).settings.threads == 6
