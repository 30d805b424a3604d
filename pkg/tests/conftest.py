"""
INSTRUCTION HEADER
What this file does: Shared pytest setup: puts `src` on sys.path, registers the `slow` marker and a `--seed` option.
Where it runs: Picked up automatically by pytest.
How to run: `pytest tests` (everything), `pytest tests -m "not slow"` (kernel and plumbing only), `pytest tests --seed 7`.
Common failures + fixes: ModuleNotFoundError for fourtangle: run pytest from the repo root.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT / "src"))

DEFAULT_SEED = 20140101


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized property tests")


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: long chain sweeps and large property suites")


@pytest.fixture
def seed(request: pytest.FixtureRequest) -> int:
    return int(request.config.getoption("--seed"))


@pytest.fixture
def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


@pytest.fixture
def repo_root() -> Path:
    return REPO_ROOT
