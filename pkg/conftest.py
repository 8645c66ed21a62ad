from pathlib import Path

import pytest

from problem import Problem

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def fixture_path():
    """Absolute path of a file under fixtures/."""
    return lambda name: str(FIXTURES / name)


@pytest.fixture
def example1() -> Problem:
    return Problem.from_rows([[4, -2], [1, -5]])


@pytest.fixture
def example2() -> Problem:
    return Problem.from_rows([[4, -5], [1, -5]])


@pytest.fixture
def good_and_chore() -> Problem:
    return Problem.from_rows([[6, 2], [0, -1]])


@pytest.fixture
def shared_good() -> Problem:
    return Problem.from_rows([[1], [1], [-1]])


@pytest.fixture
def family():
    """u_1 = (-1, -3, c), u_2 = (-2, -1, c); c = 0 drops the null column."""

    def build(c: int) -> Problem:
        if c == 0:
            return Problem.from_rows([[-1, -3], [-2, -1]])
        return Problem.from_rows([[-1, -3, c], [-2, -1, c]], items=["a", "b", "c"])

    return build
