"""Shared fixtures: every test runs against packaged defaults only."""

import pytest

from psiab.core.config import Settings, use_settings


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the config directory at an empty temp dir and reset the cache."""
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    monkeypatch.setenv("PSIAB_CONFIG_DIR", str(config_dir))
    monkeypatch.delenv("PSIAB_TOL", raising=False)
    use_settings(Settings())
    yield config_dir
    use_settings(Settings())


@pytest.fixture
def settings():
    return Settings()
