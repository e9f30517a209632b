import functools
import sys

import pytest

from scsplit.oracle import Filter, generate_sc


@functools.lru_cache(maxsize=None)
def census(n, flt):
    return generate_sc(n, Filter(flt))


@pytest.fixture(scope="session")
def get_census():
    return census


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.result_lines():
        terminalreporter.write_line(line)
