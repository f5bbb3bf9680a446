import pytest

from arrangis import catalog

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ceva():
    return catalog.ceva7(), catalog.ceva7_character(), catalog.ceva7_cycle()


@pytest.fixture(scope="session")
def maclane_plus():
    return catalog.maclane(1), catalog.maclane_character(), catalog.maclane_cycle()


@pytest.fixture(scope="session")
def maclane_minus():
    return catalog.maclane(-1), catalog.maclane_character(), catalog.maclane_cycle()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
