import pytest
from hypothesis import settings

from rootzeta import mseries

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    terminalreporter.write_line(f"holomorphy remainder events: {mseries.remainder_events}")


def pytest_sessionfinish(session, exitstatus):
    if mseries.remainder_events and exitstatus == 0:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED
