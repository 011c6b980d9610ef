import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def n199():
    return np.arange(1, 200, dtype=float)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_REPORT as REPORT

    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
