import pytest

from symconf import Configuration, CyclicTriple, cremona_richmond, cyclic_configuration
from symconf.core import disjoint_union


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


FANO_TEXT = "012 034 056 135 146 236 245"


@pytest.fixture
def fano():
    return Configuration(7, [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)])


@pytest.fixture
def mobius_kantor():
    return cyclic_configuration(CyclicTriple(8, 1, 2, 5))


@pytest.fixture
def cyclic9():
    return cyclic_configuration(CyclicTriple(9, 1, 2, 6))


@pytest.fixture
def cremona():
    return cremona_richmond()


@pytest.fixture
def double_fano(fano):
    return disjoint_union(fano, fano)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
