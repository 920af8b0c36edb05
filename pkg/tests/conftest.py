import networkx as nx
import pytest

from twopage.generators import enumerate_small, from_networkx
from twopage.graph import Graph


@pytest.fixture(scope="session")
def corpus8():
    return list(enumerate_small(8))


@pytest.fixture
def k4():
    return Graph.build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def octahedron():
    return from_networkx(nx.octahedral_graph())


def cycle_graph(n: int) -> Graph:
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
