import pytest

CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    def record(number, label, ok):
        CRITERIA.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
