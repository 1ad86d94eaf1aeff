import pytest

from trigenus import boundary_5simplex, davis_construction, run_pipeline, trisection_report
from trigenus.colouring import find_colouring

ACCEPTANCE_LINES = []

# two pentachora whose gluings merge every vertex into one class
UNCOLOURABLE_GLUINGS = [
    (0, 0, 1, 0, (0, 2, 3, 4, 1)),
    (0, 1, 1, 1, (2, 1, 0, 3, 4)),
    (0, 2, 1, 2, (1, 0, 2, 3, 4)),
    (0, 3, 1, 3, (0, 1, 2, 3, 4)),
    (0, 4, 1, 4, (0, 1, 2, 3, 4)),
]


@pytest.fixture(scope="session")
def s4():
    return boundary_5simplex()


@pytest.fixture(scope="session")
def s4_chain(s4):
    colouring = find_colouring(s4)
    moved, moved_colouring = run_pipeline(s4, colouring)
    return colouring, moved, moved_colouring, trisection_report(moved, moved_colouring)


@pytest.fixture(scope="session")
def davis():
    return davis_construction()


@pytest.fixture(scope="session")
def davis_chain(davis):
    moved, moved_colouring = run_pipeline(davis.triangulation, davis.colouring)
    return moved, moved_colouring, trisection_report(moved, moved_colouring)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
