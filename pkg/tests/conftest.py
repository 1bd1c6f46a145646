import pytest

from permcoh.core import Registry

ACCEPTANCE_LINES = []


@pytest.fixture
def reg_a():
    return Registry.of("a!")


@pytest.fixture
def reg_ab():
    return Registry.of("a!", "b")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
