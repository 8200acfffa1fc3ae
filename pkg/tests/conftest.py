import os

import pytest
from hypothesis import HealthCheck, settings

from csl.regularity import AUDIT

settings.register_profile(
    "csl",
    max_examples=int(os.environ.get("CSL_MAX_EXAMPLES", "60")),
    deadline=None,
    derandomize="CSL_SEED" not in os.environ,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("csl")

ACCEPTANCE_LINES = []


def pytest_configure(config):
    seed = os.environ.get("CSL_SEED")
    if seed is not None and getattr(config.option, "hypothesis_seed", None) is None:
        config.option.hypothesis_seed = int(seed)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session", autouse=True)
def implication_chain_audit():
    """Every report built anywhere in the run must satisfy the chain."""
    yield
    assert not AUDIT.violations, AUDIT.violations[:5]
