from fractions import Fraction

import pytest

from hyperthreshold.construct import parse_code

GOLDEN_CODE = "0 3 0 3 0 0 3 3"
GOLDEN_DEGREES = [13, 13, 13, 11, 11, 11, 7, 7, 7, 4, 4, 4, 4, 3, 2, 2]
GOLDEN_X = [0, 6, 6, 9, 13, 13, 13, 14, 16, 16, 26, 26, 43, 43, 52, 52]
GOLDEN_VALUES = [Fraction(x, 3) for x in GOLDEN_X]

# hyperedges as listed for the worked example, 1-based
GOLDEN_EDGES_1BASED = [
    {1, 2, 3, 4}, {1, 6, 7, 8}, {2, 6, 7, 8}, {3, 6, 7, 8}, {4, 6, 7, 8}, {5, 6, 7, 8},
    {1, 11, 12, 13}, {2, 11, 12, 13}, {3, 11, 12, 13}, {4, 11, 12, 13}, {5, 11, 12, 13},
    {6, 11, 12, 13}, {7, 11, 12, 13}, {8, 11, 12, 13}, {9, 11, 12, 13}, {10, 11, 12, 13},
    {1, 14, 15, 16}, {2, 14, 15, 16}, {3, 14, 15, 16}, {4, 14, 15, 16}, {5, 14, 15, 16},
    {6, 14, 15, 16}, {7, 14, 15, 16}, {8, 14, 15, 16}, {9, 14, 15, 16}, {10, 14, 15, 16},
    {11, 14, 15, 16}, {12, 14, 15, 16}, {13, 14, 15, 16},
]


@pytest.fixture
def golden_code():
    return parse_code(GOLDEN_CODE)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
