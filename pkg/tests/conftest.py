import random

import pytest

from realblocks.examples import load_table, load_tree


@pytest.fixture(scope="session")
def ree():
    return load_tree("ree")


@pytest.fixture(scope="session")
def star3():
    return load_tree("star3")


@pytest.fixture(scope="session")
def single_edge():
    return load_tree("single_edge")


@pytest.fixture(scope="session")
def tables():
    return {name: load_table(name) for name in ("c3", "c5c4", "c15c4", "c15c8")}


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
