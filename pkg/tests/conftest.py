from pathlib import Path

import pytest

from pseudoeq import fixtures

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture
def B():
    return fixtures.fixture_b()


@pytest.fixture
def A():
    return fixtures.fixture_a()


@pytest.fixture
def C():
    return fixtures.fixture_c()


@pytest.fixture
def fixture_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
