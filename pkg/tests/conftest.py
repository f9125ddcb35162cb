import pytest

from helpers import ACCEPTANCE
from shirshov import Alphabet


@pytest.fixture
def A2():
    return Alphabet.standard(2)


@pytest.fixture
def A3():
    return Alphabet.standard(3)


@pytest.fixture
def A5():
    return Alphabet.standard(5)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
