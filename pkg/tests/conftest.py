"""Shared fixtures.

The acceptance tests record one verdict line each; those lines are replayed
in the terminal summary so a plain `pytest -v` run shows them even with
output capture on.
"""

from __future__ import annotations

import os
import sys

import pytest

# Make the local oracle helpers importable under any pytest import mode.
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    """Record and print 'ACCEPTANCE <k> <name>: PASS|FAIL' for one criterion."""

    def record(number: int, name: str, ok: bool) -> bool:
        line = f"ACCEPTANCE {number} {name}: {'PASS' if ok else 'FAIL'}"
        print(line)
        _ACCEPTANCE_LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
