"""
Configuration Module

LEARNING: Layered configuration (YAML defaults + .env overrides)

What we're building:
- Read config.yaml once
- Let .env / environment variables override a few knobs
- Hand out one immutable Settings object
"""

import os
import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

from src.exceptions import ConfigError

# Set up module logger
logger = logging.getLogger(__name__)

# Repository root holds config.yaml
DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config.yaml"

ENV_MAX_ELEMENTS = "POSETTOP_MAX_ELEMENTS"
ENV_LOG_LEVEL = "POSETTOP_LOG_LEVEL"


@dataclass(frozen=True)
class Settings:
    """Resolved configuration values."""
    max_elements: int = 200_000
    max_shelling_facets: int = 24
    shelling_budget: int = 200_000
    rao_budget: int = 200_000
    series_order: int = 16
    seed: int = 20240101
    random_posets: int = 100
    random_poset_size: int = 8
    random_group_elements: int = 20
    check_max_size: int = 6
    log_level: str = "INFO"


def _positive_int(key: str, value) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigError(key, f"expected an integer, got {value!r}")
    if number <= 0:
        raise ConfigError(key, f"must be positive, got {number}")
    return number


def load_config(path: Optional[str] = None) -> Settings:
    """
    Load settings from YAML, then apply environment overrides.

    LEARNING POINT:
    - yaml.safe_load never executes tags from the file
    - load_dotenv() fills os.environ from .env without clobbering real env vars
    - Missing sections fall back to dataclass defaults

    Args:
        path: Path to a YAML file (default: config.yaml at the repo root)

    Returns:
        Settings instance

    Raises:
        ConfigError: If a value has the wrong type or range
    """
    load_dotenv()
    config_path = Path(path) if path else DEFAULT_CONFIG_PATH
    raw = {}
    if config_path.exists():
        with open(config_path, "r", encoding="utf-8") as handle:
            raw = yaml.safe_load(handle) or {}
        logger.debug("Loaded config from %s", config_path)
    else:
        logger.debug("No config file at %s, using defaults", config_path)

    if not isinstance(raw, dict):
        raise ConfigError(str(config_path), "top level must be a mapping")

    limits = raw.get("limits") or {}
    series = raw.get("series") or {}
    check = raw.get("check") or {}
    logging_section = raw.get("logging") or {}

    settings = Settings()
    values = {}
    for key, section, field in (
        ("limits.max_elements", limits, "max_elements"),
        ("limits.max_shelling_facets", limits, "max_shelling_facets"),
        ("limits.shelling_budget", limits, "shelling_budget"),
        ("limits.rao_budget", limits, "rao_budget"),
        ("series.order", series, "series_order"),
        ("check.random_posets", check, "random_posets"),
        ("check.random_poset_size", check, "random_poset_size"),
        ("check.random_group_elements", check, "random_group_elements"),
        ("check.max_size", check, "check_max_size"),
    ):
        name = key.split(".")[1]
        if name in section:
            values[field] = _positive_int(key, section[name])
    if "seed" in check:
        try:
            values["seed"] = int(check["seed"])
        except (TypeError, ValueError):
            raise ConfigError("check.seed", f"expected an integer, got {check['seed']!r}")
    if "level" in logging_section:
        values["log_level"] = str(logging_section["level"]).upper()

    # Environment wins over the file
    if os.environ.get(ENV_MAX_ELEMENTS):
        values["max_elements"] = _positive_int(ENV_MAX_ELEMENTS, os.environ[ENV_MAX_ELEMENTS])
        logger.info("Feasibility guard overridden by %s: %d", ENV_MAX_ELEMENTS, values["max_elements"])
    if os.environ.get(ENV_LOG_LEVEL):
        values["log_level"] = os.environ[ENV_LOG_LEVEL].upper()

    if values.get("log_level", settings.log_level) not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise ConfigError("logging.level", f"unknown level {values['log_level']!r}")

    return replace(settings, **values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings (loaded on first use)."""
    return load_config()
