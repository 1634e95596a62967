import sys
from math import gcd

import pytest

from pythapair.gammabuild import build
from pythapair.pythagoras import from_params, make_pair


def small_primitive_pairs(max_m=6):
    return [
        from_params(m, n)
        for m in range(2, max_m + 1)
        for n in range(1, m)
        if (m - n) % 2 and gcd(m, n) == 1
    ]


@pytest.fixture
def g34_24():
    return build(make_pair(3, 4), "24")


@pytest.fixture
def g34_28():
    return build(make_pair(3, 4), "28")


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
