"""Configuration management for Neuralcanon."""

import os
from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, Field, field_validator

from .errors import DomainError

# The oracle enumerates 3^n candidates; beyond this nothing is desk-scale
ORACLE_HARD_LIMIT = 16


class EngineConfig(BaseModel):
    """Canonical form engine settings."""
    strategy: Literal["fast", "full", "both"] = "fast"
    decomposition: Literal["split", "transversal"] = "split"


class OracleConfig(BaseModel):
    """Brute-force oracle settings."""
    max_n: int = 10

    @field_validator("max_n")
    @classmethod
    def _within_hard_limit(cls, value: int) -> int:
        if not 1 <= value <= ORACLE_HARD_LIMIT:
            raise ValueError(f"oracle max_n must lie in 1..{ORACLE_HARD_LIMIT}")
        return value


class OutputConfig(BaseModel):
    """Report output defaults."""
    format: Literal["text", "json"] = "text"


class LoggingConfig(BaseModel):
    level: str = "WARNING"


class NeuralCanonConfig(BaseModel):
    """Main configuration for Neuralcanon."""
    engine: EngineConfig = Field(default_factory=EngineConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


def default_config_dir() -> Path:
    if "NEURALCANON_CONFIG_DIR" in os.environ:
        return Path(os.environ["NEURALCANON_CONFIG_DIR"])
    # config/ directory relative to the source checkout
    return Path(__file__).parent.parent.parent.parent / "config"


def load_config(config_dir: Optional[Path] = None) -> NeuralCanonConfig:
    """Load configuration from YAML files.

    Loads base config from neuralcanon.yaml, overlays neuralcanon.local.yaml
    if it exists, then applies NEURALCANON_ORACLE_MAX_N.

    Raises:
        DomainError: if the oracle cap override is not an integer in 1..16
    """
    if config_dir is None:
        config_dir = default_config_dir()

    config_data: dict = {}

    base_config = config_dir / "neuralcanon.yaml"
    if base_config.exists():
        with open(base_config) as f:
            config_data = yaml.safe_load(f) or {}

    local_config = config_dir / "neuralcanon.local.yaml"
    if local_config.exists():
        with open(local_config) as f:
            local_data = yaml.safe_load(f) or {}
            config_data = deep_merge(config_data, local_data)

    override = os.environ.get("NEURALCANON_ORACLE_MAX_N")
    if override is not None:
        try:
            max_n = int(override)
        except ValueError:
            raise DomainError(f"NEURALCANON_ORACLE_MAX_N must be an integer, got {override!r}")
        if not 1 <= max_n <= ORACLE_HARD_LIMIT:
            raise DomainError(
                f"NEURALCANON_ORACLE_MAX_N={max_n} refused: the oracle hard limit is {ORACLE_HARD_LIMIT}"
            )
        config_data = deep_merge(config_data, {"oracle": {"max_n": max_n}})

    return NeuralCanonConfig(**config_data)


def deep_merge(base: dict, overlay: dict) -> dict:
    """Recursively merge overlay into base."""
    result = base.copy()
    for key, value in overlay.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = value
    return result
