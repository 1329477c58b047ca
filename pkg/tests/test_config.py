import logging

import pytest
from pydantic import ValidationError

from ecci_digraph.config import DEFAULT_SAMPLES, MATRIX_THRESHOLD, Settings, get_settings


def test_defaults():
    settings = get_settings()
    assert settings.threads == 1
    assert settings.matrix_threshold == MATRIX_THRESHOLD
    assert settings.samples == DEFAULT_SAMPLES
    assert (settings.tournament_cap, settings.strong_digraph_cap) == (7, 5)


def test_environment(monkeypatch):
    monkeypatch.setenv("ECCI_THREADS", "4")
    monkeypatch.setenv("ECCI_MATRIX_THRESHOLD", "100")
    settings = Settings.from_env()
    assert settings.threads == 4
    assert settings.matrix_threshold == 100


def test_explicit_values_win(monkeypatch):
    monkeypatch.setenv("ECCI_THREADS", "4")
    assert Settings.from_env(threads=2).threads == 2
    assert Settings.from_env(threads=None).threads == 4
    assert Settings.from_env(samples=7).samples == 7


def test_bad_environment_is_ignored(monkeypatch, caplog):
    monkeypatch.setenv("ECCI_THREADS", "many")
    with caplog.at_level(logging.WARNING, logger="ecci_digraph.config"):
        assert Settings.from_env().threads == 1
    assert "ECCI_THREADS" in caplog.text


def test_validation():
    with pytest.raises(ValidationError):
        Settings(threads=0)
    settings = Settings()
    with pytest.raises(ValidationError):
        settings.threads = 3
