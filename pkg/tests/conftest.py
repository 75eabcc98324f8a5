import pytest

ACCEPTANCE = []


@pytest.fixture
def record():
    def _record(number, name, passed, detail=""):
        ACCEPTANCE.append((number, name, passed, detail))

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] AC{number} {name}: {detail}")
