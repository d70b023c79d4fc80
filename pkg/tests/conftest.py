"""
Shared fixtures.
"""

import random

import pytest

from src.config import Config
from src.lucas import LucasParams, scan_params


@pytest.fixture(autouse=True)
def no_log_file(monkeypatch):
    """Keep CLI runs from writing logs/lucasdiv.log."""
    monkeypatch.setattr(Config, "LOG_FILE", "")


@pytest.fixture
def fib() -> LucasParams:
    return LucasParams(1, 1)


@pytest.fixture
def params_grid() -> list[LucasParams]:
    """Non-degenerate params with a in [1, 6]."""
    return scan_params(1, 6)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def report_path(tmp_path):
    """Path for a CSV report plus its default checkpoint."""
    return tmp_path / "scan.csv"
