import re

import pytest

from algebroids.exactfield import RationalField, PrimeField
from algebroids.catalog import (
    FiniteGroup,
    Character,
    group_hopf_algebroid,
    character_twisted_hopf,
    pair_groupoid_hopf_algebroid,
    function_algebra_hopf,
)

QQ = RationalField()


@pytest.fixture(scope="session")
def qq():
    return QQ


@pytest.fixture(scope="session")
def gf7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def kz2():
    return group_hopf_algebroid(FiniteGroup.cyclic(2), QQ)


@pytest.fixture(scope="session")
def kz2_twisted():
    z2 = FiniteGroup.cyclic(2)
    chi = Character(z2, QQ, [QQ.one, -QQ.one])
    return character_twisted_hopf(z2, QQ, chi)


@pytest.fixture(scope="session")
def kz3():
    return group_hopf_algebroid(FiniteGroup.cyclic(3), QQ)


@pytest.fixture(scope="session")
def ks3():
    return group_hopf_algebroid(FiniteGroup.symmetric(3), QQ)


@pytest.fixture(scope="session")
def m2():
    return pair_groupoid_hopf_algebroid(2, QQ)


@pytest.fixture(scope="session")
def m3():
    return pair_groupoid_hopf_algebroid(3, QQ)


@pytest.fixture(scope="session")
def fn_s3():
    return function_algebra_hopf(FiniteGroup.symmetric(3), QQ)


# ---------------------------------------------------------------------------
# acceptance summary: one ACCEPTANCE line per criterion in the terminal
# summary, uncaptured, whenever the acceptance tests ran.

_ACCEPTANCE = {}
_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call":
        _ACCEPTANCE[n] = report.outcome == "passed"
    elif report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE[n] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for n in sorted(_ACCEPTANCE):
        verdict = "PASS" if _ACCEPTANCE[n] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {n}: {verdict}")
