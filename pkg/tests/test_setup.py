#!/usr/bin/env python3
"""
Environment smoke test.
Run this after installing dependencies to check everything works.
"""

import importlib

import pytest

from src.config import DEFAULT_CONFIG_PATH, load_config


@pytest.mark.parametrize("package", ["yaml", "dotenv", "sympy", "networkx", "hypothesis"])
def test_imports(package):
    """All required packages can be imported."""
    assert importlib.import_module(package) is not None


def test_config_file_parses():
    assert DEFAULT_CONFIG_PATH.exists()
    settings = load_config(str(DEFAULT_CONFIG_PATH))
    assert settings.max_elements > 0
    assert settings.check_max_size > 0


def test_package_imports():
    """Every src package imports without touching the network or a database."""
    for name in ("poset", "complex", "homology", "shelling", "families",
                 "identities", "arrangements", "oracles", "pipeline"):
        assert importlib.import_module(f"src.{name}") is not None
