import numpy as np
import pytest

from spikecoding.generators import GeneratorSpec, generate


@pytest.fixture(scope="session")
def sinusoid_16k():
    return generate(GeneratorSpec("sinusoidal"))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
