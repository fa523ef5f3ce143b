import os

import pytest

from chromroot.catalog import random_corpus
from chromroot.graph_io import read_graph6_lines

DATA = os.path.join(os.path.dirname(__file__), "data")
CATALOG_UPTO7 = os.path.join(DATA, "connected_upto7.g6")

_acceptance = []


@pytest.fixture(scope="session")
def corpus():
    """The seeded 200-graph random corpus (n <= 8, p in {0.2, 0.5, 0.8})."""
    return random_corpus(200, max_n=8, seed=20240601)


@pytest.fixture(scope="session")
def catalog_upto7():
    with open(CATALOG_UPTO7) as fh:
        return list(read_graph6_lines(fh))


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        terminalreporter.write_line(f"{outcome.upper():7s} {name}  ({duration:.2f}s)")
