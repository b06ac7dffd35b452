import math

import pytest

from models.circle import NumericMode, fit_circle, from_degrees, regular_polygon
from utils.settings import get_settings

SQUARE_POINTS = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run acceptance-scale loops")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def deg():
    """Point set from degrees, Exact mode unless told otherwise."""
    def build(*values, mode=NumericMode.EXACT):
        return from_degrees(values, mode)
    return build


@pytest.fixture
def six_point():
    # All nine diagonals have distinct lengths.
    return from_degrees([0, 47, 110, 162, 223, 300])


@pytest.fixture
def equal_pair_six():
    # (0,2) and (2,4) both span 110 degrees and share p2; no other ties.
    return from_degrees([0, 47, 110, 162, 220, 300])


@pytest.fixture
def square():
    return fit_circle(SQUARE_POINTS)


@pytest.fixture
def hexagon():
    return regular_polygon(6)


@pytest.fixture
def regular_points():
    def build(n, radius=1.0, center=(0.0, 0.0)):
        return [[center[0] + radius * math.cos(2 * math.pi * k / n),
                 center[1] + radius * math.sin(2 * math.pi * k / n)] for k in range(n)]
    return build


@pytest.fixture
def settings_env(monkeypatch):
    """Set CONCYCLIC_* variables for one test."""
    def apply(**values):
        for name, value in values.items():
            monkeypatch.setenv(f"CONCYCLIC_{name.upper()}", str(value))
        get_settings.cache_clear()
        return get_settings()
    yield apply
    get_settings.cache_clear()


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
