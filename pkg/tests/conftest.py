import pytest

from cactus_evc.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def make(n, edges):
    return Graph(n, tuple(edges))


BOWTIE = make(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
DIAMOND = make(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
C4_PENDANT = make(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
TRIANGLE_TAIL = make(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
