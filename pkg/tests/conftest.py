import pytest

from epgclique.generate import sun3_instance


@pytest.fixture
def sun3():
    return sun3_instance()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
