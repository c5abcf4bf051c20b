import logging

import pytest
from pydantic import ValidationError

from symplectic_rigidity.config import Settings, configure_logging, get_settings
from symplectic_rigidity.errors import DegenerateStep, DimensionMismatch, HypothesisViolation, ToolkitError


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_defaults(monkeypatch):
    for name in ("SYMPLECTIC_LOG_LEVEL", "SYMPLECTIC_MAX_WORD_LENGTH", "SYMPLECTIC_GRAPH_RECURSION_LIMIT"):
        monkeypatch.delenv(name, raising=False)
    settings = get_settings()
    assert settings.log_level == "WARNING"
    assert settings.max_word_length == 10_000
    assert settings.graph_recursion_limit == 200


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("SYMPLECTIC_LOG_LEVEL", "debug")
    monkeypatch.setenv("SYMPLECTIC_GRAPH_RECURSION_LIMIT", "50")
    settings = get_settings()
    assert settings.log_level == "DEBUG"
    assert settings.graph_recursion_limit == 50


def test_settings_are_validated():
    with pytest.raises(ValidationError):
        Settings(graph_recursion_limit=3)


def test_log_level_is_checked():
    assert Settings(log_level="info").log_level == "INFO"
    with pytest.raises(ValidationError):
        Settings(log_level="verbose")
    with pytest.raises(ValueError):
        configure_logging("loud")


def test_configure_logging_installs_one_handler():
    configure_logging("INFO")
    configure_logging("INFO")
    logger = logging.getLogger("symplectic_rigidity")
    assert len(logger.handlers) == 1
    assert logger.level == logging.INFO


def test_error_hierarchy():
    assert issubclass(DimensionMismatch, ValueError)
    error = DegenerateStep(2, "y = 0")
    assert isinstance(error, ToolkitError)
    assert error.step == 2
    assert "k=2" in str(error)
    assert HypothesisViolation("relation pattern").clause == "relation pattern"
