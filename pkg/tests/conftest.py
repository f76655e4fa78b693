import pytest

# one line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    def _report(number: int, title: str, ok: bool, seconds: float, limit: float, detail: str = ""):
        status = "PASS" if ok and seconds < limit else "FAIL"
        line = f"criterion {number:>2} {status}  {title}  ({seconds:.1f}s, limit {limit:.0f}s)"
        if detail:
            line += f"  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return status == "PASS"
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
