from __future__ import annotations

import numpy as np
import pytest

from hypgrow.domains import catalog


@pytest.fixture(scope="session")
def cat():
    return catalog()


@pytest.fixture
def origin():
    return np.zeros(2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
