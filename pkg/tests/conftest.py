"""Shared fixtures: the reference configuration and its steady state."""

import pytest

from duomech import steady_state
from refsystem import REFERENCE_CFG, make_reference_config


@pytest.fixture(scope="session")
def reference_config():
    return make_reference_config()


@pytest.fixture(scope="session")
def reference_ss(reference_config):
    return steady_state(reference_config)


@pytest.fixture(scope="session")
def reference_cfg_path():
    assert REFERENCE_CFG.is_file()
    return str(REFERENCE_CFG)


def pytest_terminal_summary(terminalreporter):
    """Replay the acceptance verdicts, one line per criterion."""
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.VERDICTS:
            terminalreporter.write_line(line)
