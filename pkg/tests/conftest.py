from __future__ import annotations

import pytest

from rees_commute.algebra import system_from_table
from rees_commute.groups import named_group


@pytest.fixture(scope="session")
def t3():
    """Left-constant system xy = f(x), f(0) = f(1) = 0, f(2) = 2."""
    f = [0, 0, 2]
    return system_from_table(3, [[f[x]] * 3 for x in range(3)], ["a", "b", "c"])


@pytest.fixture(scope="session")
def s3():
    return named_group("S3")



def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
