import io
import json

import pytest

from cisgraph import ParameterRangeError
from cisgraph.cli import run
from cisgraph.settings import CisSettings, get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_defaults():
    settings = CisSettings()
    assert settings.jobs == 1
    assert settings.log_level == "WARNING"
    assert settings.json_indent is False


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("CIS_JOBS", "3")
    monkeypatch.setenv("CIS_LOG_LEVEL", "debug")
    settings = get_settings()
    assert settings.jobs == 3
    assert settings.log_level == "DEBUG"
    assert get_settings() is settings


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv("CIS_JOBS", "0")
    with pytest.raises(ParameterRangeError):
        get_settings()
    monkeypatch.setenv("CIS_JOBS", "1")
    monkeypatch.setenv("CIS_LOG_LEVEL", "loud")
    with pytest.raises(ParameterRangeError):
        get_settings()


def test_indented_output(monkeypatch):
    monkeypatch.setenv("CIS_JSON_INDENT", "true")
    out = io.StringIO()
    assert run(["formula", "--family", "cycle", "--n", "5"], out=out) == 0
    text = out.getvalue()
    assert text.startswith('{\n  "family": "cycle"')
    assert json.loads(text)["value"] == "21"


def test_invalid_environment_is_reported(monkeypatch):
    monkeypatch.setenv("CIS_JOBS", "0")
    err = io.StringIO()
    assert run(["construct", "--graph6", "Bw"], out=io.StringIO(), err=err) == 3
    assert err.getvalue().startswith("error[E-RANGE]")
