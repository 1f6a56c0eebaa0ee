import re
from functools import lru_cache

import pytest

from fimgrowth import oracle


@lru_cache(maxsize=None)
def _bfs_counts(rank, K_max):
    return oracle.enumerate_munn_tree_counts(rank, K_max, budget=10**8)


@pytest.fixture(scope="session")
def bfs_counts():
    """``bfs_counts(rank, K_max) -> {(t, k): count}``, shared across the session."""
    return _bfs_counts


_acceptance = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+?)(?:\[|$)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    failed = report.failed
    if report.when == "call" or failed:
        _acceptance[key] = _acceptance.get(key, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(_acceptance.items()):
        terminalreporter.write_line(f"criterion {num:2d} {name:<40s} {'PASS' if ok else 'FAIL'}")
