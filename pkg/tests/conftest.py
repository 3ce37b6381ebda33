import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from kfidelity.states import StatePair, random_density

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_pair(d, seed, ranks=None):
    rng = np.random.default_rng(seed)
    r1, r2 = ranks if ranks is not None else (d, d)
    s1, s2 = rng.integers(0, 2**63, size=2)
    return StatePair(random_density(d, r1, s1), random_density(d, r2, s2))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
