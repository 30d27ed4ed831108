import numpy as np
import pytest

from qradius.core import complex_gaussian


def random_vector(rng, n):
    return complex_gaussian(rng, (n,)) * np.exp(rng.normal())


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
