"""Shared fixtures: the acceptance scoreboard printed after every run."""

import pytest

_lines = []


@pytest.fixture
def scoreboard():
    """Append one PASS/FAIL line per acceptance check; printed at the end."""
    return _lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _lines:
        terminalreporter.section("acceptance scoreboard")
        for line in _lines:
            terminalreporter.write_line(line)
