import mpmath
import pytest


@pytest.fixture
def mp50():
    ctx = mpmath.MPContext()
    ctx.dps = 50
    return ctx


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
