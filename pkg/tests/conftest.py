import pytest

from vhp import benchmarks

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture(scope="session")
def reports():
    return {t: benchmarks.run_table(t) for t in benchmarks.TABLE_IDS}
