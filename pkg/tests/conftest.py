import time

import pytest

from eccspec.verify import run_sweep

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def full_sweep():
    """All checks over every connected labeled graph with n <= 6, with wall time."""
    start = time.perf_counter()
    report = run_sweep(6)
    return report, time.perf_counter() - start


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
