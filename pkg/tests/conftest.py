from __future__ import annotations

import pytest

from stpath.graph import Graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def p4() -> Graph:
    return Graph(4, ((0, 1), (1, 2), (2, 3)), 0, 3)


@pytest.fixture
def star() -> Graph:
    # center 1, leaves 0, 2, 3
    return Graph(4, ((1, 0), (1, 2), (1, 3)), 0, 2)


@pytest.fixture
def k3() -> Graph:
    # edges st, sv, vt with s=0, t=1, v=2
    return Graph(3, ((0, 1), (0, 2), (1, 2)), 0, 1)


@pytest.fixture
def c5() -> Graph:
    return Graph(5, tuple((i, (i + 1) % 5) for i in range(5)), 0, 2)


@pytest.fixture
def edge() -> Graph:
    return Graph(2, ((0, 1),), 0, 1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
