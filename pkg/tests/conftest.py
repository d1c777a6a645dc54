import pytest

from dppasm import Asm, MonotoneTriangle, validate_dpp

EX6_ROWS = [[6, 6, 6, 6, 5], [5, 4, 4, 4], [3, 3]]
EX6_PARTITION = (6, 6, 6, 6, 5, 5, 4, 4, 4, 3, 3)
EX6_TRIANGLE = ((4,), (4, 6), (3, 4, 6), (3, 4, 5, 6), (1, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6))
EX6_MATRIX = (
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
)
ORDER3_DPPS = [[], [[2]], [[3]], [[3, 1]], [[3, 2]], [[3, 3]], [[3, 3], [2]]]

CENTER_TRIANGLE = ((2,), (1, 3), (1, 2, 3))
CENTER_MATRIX = ((0, 1, 0), (1, -1, 1), (0, 1, 0))


@pytest.fixture
def ex6_dpp():
    return validate_dpp(EX6_ROWS, 6)


@pytest.fixture
def ex6_triangle():
    return MonotoneTriangle(EX6_TRIANGLE)


@pytest.fixture
def ex6_asm():
    return Asm(EX6_MATRIX)


def identity_triangle(n):
    return MonotoneTriangle(tuple(tuple(range(1, i + 1)) for i in range(1, n + 1)))


def identity_matrix(n):
    return Asm(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


# one summary line per acceptance criterion

_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(_acceptance.items(), key=lambda kv: int(kv[0].split("_")[1])):
        terminalreporter.write_line(f"{status}  {name}")
