from __future__ import annotations

from contextlib import contextmanager

import pytest

CRITERIA: dict[int, tuple[str, bool]] = {}


def _line(number: int, title: str, ok: bool) -> str:
    return f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"


@pytest.fixture
def criterion():
    """Context manager collecting failures for one acceptance criterion.

    The body appends failure descriptions to the yielded list; on exit the
    outcome is recorded, printed, and asserted.
    """
    @contextmanager
    def run(number: int, title: str):
        failures: list = []
        ok = False
        try:
            yield failures
            ok = not failures
        finally:
            CRITERIA[number] = (title, ok)
            print(_line(number, title, ok))
        assert not failures, failures[:5]
    return run


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        terminalreporter.write_line(_line(number, *CRITERIA[number]))
