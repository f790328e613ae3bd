import random

import pytest
from hypothesis import HealthCheck, settings


settings.register_profile(
    "seeded", derandomize=True, deadline=None, database=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("seeded")


@pytest.fixture
def rng():
    return random.Random(0)


_criteria = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_criteria] = []


@pytest.fixture
def criterion_log(request):
    """Collects acceptance lines for the terminal summary."""
    return request.config.stash[_criteria]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_criteria, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
