"""Pytest configuration file for the tests directory."""

import sys
from pathlib import Path

import pytest

# Add the project root directory to the Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# pylint: disable=wrong-import-position
from satblock.config import CapacityLimits  # noqa: E402
from satblock.core import EdgeSet  # noqa: E402
from satblock.enumeration import all_saturated_blockers  # noqa: E402

B_6_5 = [(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)]


def pytest_addoption(parser):
    """Add the --runslow switch."""
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless --runslow is given."""
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def b65():
    """The unique saturated blocker of size 5 on the hexagon, up to rotation."""
    return EdgeSet.from_edges(6, B_6_5)


@pytest.fixture
def pentagon_net():
    """The minimum blocker of the pentagon made of three ear-covers."""
    return EdgeSet.from_edges(5, [(0, 2), (1, 3), (2, 4)])


@pytest.fixture(scope="session")
def wide_limits():
    """Capacity limits that allow the n=9 fixed-size searches."""
    return CapacityLimits(exhaustive=9, exhaustive_sized=10)


@pytest.fixture(scope="session")
def exhaustive_corpus():
    """Every saturated blocker for n = 4..7, keyed by n."""
    return {n: all_saturated_blockers(n) for n in range(4, 8)}


@pytest.fixture(scope="session")
def near_minimum_corpus():
    """Saturated blockers with n - 1 edges for n = 7, 8."""
    return {n: all_saturated_blockers(n, n - 1) for n in (7, 8)}
