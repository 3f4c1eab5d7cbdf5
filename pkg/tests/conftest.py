from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# (criterion, description, passed) rows filled in by test_acceptance
ACCEPTANCE: list[tuple[int, str, bool]] = []


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, text, ok in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{n:2d}] {text}")
