"""Tests for configuration loading."""

import pytest
from pydantic import ValidationError

from neuralcanon.core.config import (
    ORACLE_HARD_LIMIT,
    NeuralCanonConfig,
    OracleConfig,
    deep_merge,
    load_config,
)
from neuralcanon.core.errors import DomainError


@pytest.fixture(autouse=True)
def no_env_override(monkeypatch):
    monkeypatch.delenv("NEURALCANON_ORACLE_MAX_N", raising=False)


def test_defaults_without_files(tmp_path):
    """Test the built-in defaults when no YAML exists."""
    config = load_config(tmp_path)
    assert config == NeuralCanonConfig()
    assert config.engine.strategy == "fast"
    assert config.engine.decomposition == "split"
    assert config.oracle.max_n == 10


def test_shipped_config_loads():
    """Test the repository's config/neuralcanon.yaml."""
    config = load_config()
    assert config.output.format == "text"
    assert config.logging.level == "WARNING"


def test_local_overlay(tmp_path):
    """Test that neuralcanon.local.yaml overrides single keys."""
    (tmp_path / "neuralcanon.yaml").write_text("engine:\n  strategy: full\n  decomposition: transversal\n")
    (tmp_path / "neuralcanon.local.yaml").write_text("engine:\n  strategy: both\n")
    config = load_config(tmp_path)
    assert config.engine.strategy == "both"
    assert config.engine.decomposition == "transversal"


def test_env_override(tmp_path, monkeypatch):
    """Test NEURALCANON_ORACLE_MAX_N."""
    monkeypatch.setenv("NEURALCANON_ORACLE_MAX_N", "12")
    assert load_config(tmp_path).oracle.max_n == 12


@pytest.mark.parametrize("value", ["17", "0", "many"])
def test_env_override_refused(tmp_path, monkeypatch, value):
    """Test that the oracle cap never exceeds the hard limit."""
    monkeypatch.setenv("NEURALCANON_ORACLE_MAX_N", value)
    with pytest.raises(DomainError):
        load_config(tmp_path)


def test_yaml_cap_validated(tmp_path):
    """Test the oracle cap validator on file values."""
    (tmp_path / "neuralcanon.yaml").write_text(f"oracle:\n  max_n: {ORACLE_HARD_LIMIT + 1}\n")
    with pytest.raises(ValidationError):
        load_config(tmp_path)
    assert OracleConfig(max_n=ORACLE_HARD_LIMIT).max_n == ORACLE_HARD_LIMIT


def test_unknown_strategy_rejected():
    """Test the engine strategy literal."""
    with pytest.raises(ValidationError):
        NeuralCanonConfig(engine={"strategy": "slow"})


def test_deep_merge():
    """Test nested merging without mutating the base."""
    base = {"engine": {"strategy": "fast", "decomposition": "split"}, "output": {"format": "text"}}
    merged = deep_merge(base, {"engine": {"strategy": "full"}, "extra": 1})
    assert merged == {
        "engine": {"strategy": "full", "decomposition": "split"},
        "output": {"format": "text"},
        "extra": 1,
    }
    assert base["engine"]["strategy"] == "fast"
