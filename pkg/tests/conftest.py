import pytest

from ecci_digraph.config import Settings
from ecci_digraph.families.fixtures import fixture


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def fig1():
    return fixture("fig1")


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("ECCI_THREADS", raising=False)
    monkeypatch.delenv("ECCI_MATRIX_THRESHOLD", raising=False)
