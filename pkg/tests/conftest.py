import random

import pytest
from hypothesis import HealthCheck, settings

from tkt.braids import BraidFamily, BraidWord

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance[name] = ("PASS" if report.passed else "FAIL", report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    from tests.test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for name, text in CRITERIA:
        status = _acceptance.get(name, ("NOT RUN", ""))[0]
        terminalreporter.write_line(f"{status}  {name}: {text}")


def random_family(rng: random.Random, N: int, p: int, q: int, lo: int = 2, hi: int = 5) -> BraidFamily:
    """A braid family whose n = 0 closure is a knot."""
    while True:
        w1 = tuple(rng.choice((1, -1)) * rng.randint(1, N - 1) for _ in range(rng.randint(lo, hi)))
        w2 = tuple(rng.choice((1, -1)) * rng.randint(1, N - 1) for _ in range(rng.randint(lo, hi)))
        fam = BraidFamily(BraidWord(N, w1), BraidWord(N, w2), p, q)
        if (fam.beta1 * fam.beta2).cycle_count() == 1:
            return fam


@pytest.fixture
def rng():
    return random.Random(20261019)
