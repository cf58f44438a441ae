import sys
from functools import lru_cache

import pytest

from xichar.catalog import build_group
from xichar.chartable import character_table


@lru_cache(maxsize=None)
def group(name):
    return build_group(name)


@lru_cache(maxsize=None)
def table(name):
    return character_table(group(name))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])


@pytest.fixture
def S3():
    return group("S:3")


@pytest.fixture
def C2():
    return group("C:2")


@pytest.fixture
def C4():
    return group("C:4")


@pytest.fixture
def Q8():
    return group("Q:8")
