import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion."""

    def record(number: int, ok: bool, message: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {message}"
        print(line)
        ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
