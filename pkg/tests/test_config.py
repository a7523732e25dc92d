import pytest

from app.config import (
    ADMISSIBLE_PRUNE_RULES,
    WORKERS_ENV_VAR,
    Config,
    SearchSettings,
    config,
    parse_workers,
)
from app.exceptions import ConfigError
from app.schema import SearchConfig


@pytest.fixture
def restore_config():
    saved = config._config
    yield
    config._config = saved


def test_defaults():
    settings = SearchSettings()
    assert settings.l == 2
    assert settings.n_max == 9
    assert settings.prune_rules == list(ADMISSIBLE_PRUNE_RULES)


def test_config_is_a_singleton():
    assert Config() is config


def test_empty_config_uses_defaults(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV_VAR, raising=False)
    built = Config._build({})
    assert built.search == SearchSettings()
    assert built.lemmas.coloring_budget == 10**5


def test_from_toml(tmp_path, restore_config):
    path = tmp_path / "config.toml"
    path.write_text('[search]\nl = 3\nn_max = 7\nprune_rules = ["connectivity"]\n')
    Config.from_toml(str(path))
    assert config.search.l == 3
    assert config.search.n_max == 7
    cfg = SearchConfig.from_settings(config.search, n_max=8)
    assert cfg.n_max == 8
    assert cfg.prune_rules == ["connectivity"]


@pytest.mark.parametrize(
    "body",
    [
        "[search]\nworkers = 0\n",
        '[search]\nprune_rules = ["L-FORCE"]\n',
        "[search]\nbatch_size = -1\n",
    ],
)
def test_invalid_files(tmp_path, restore_config, body):
    path = tmp_path / "config.toml"
    path.write_text(body)
    with pytest.raises(ConfigError):
        Config.from_toml(str(path))


def test_environment_overrides_workers(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV_VAR, "3")
    assert Config._build({"search": {"workers": 8}}).search.workers == 3


def test_parse_workers():
    assert parse_workers("4") == 4
    for bad in ("0", "-2", "many"):
        with pytest.raises(ConfigError):
            parse_workers(bad)
