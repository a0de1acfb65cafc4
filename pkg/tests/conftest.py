import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from charcore.characters import build_table


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="run long exhaustive sweeps",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


class TableCache:
    """Build each character table at most once per session."""

    def __init__(self):
        self._tables = {}

    def get(self, n):
        if n not in self._tables:
            self._tables[n] = build_table(n)
        return self._tables[n]


@pytest.fixture(scope="session")
def tables():
    return TableCache()
