from __future__ import annotations

import pytest
from hypothesis import settings

from hilbspine.staircase import Grading, make_ideal

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GRADINGS = [Grading(1, 1), Grading(1, 2), Grading(2, 3), Grading(1, 3)]


@pytest.fixture
def running():
    """<x^11, x^8y, x^4y^2, xy^3, y^7> under (1,2)."""
    return make_ideal((11, 8, 4, 1, 1, 1, 1)), Grading(1, 2)


@pytest.fixture
def standard_example():
    """<x^6, x^4y, x^2y^2, xy^3, y^4>, the lex-least ideal of its standard fibre."""
    return make_ideal((6, 4, 2, 1)), Grading(1, 1)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
