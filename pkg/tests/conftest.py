from functools import lru_cache

import pytest

from kdiamond.series import expand_coeffs

TABLE_HORIZON = 10030


@lru_cache(maxsize=None)
def big_table(k: int):
    return expand_coeffs(k, TABLE_HORIZON)


@pytest.fixture(scope="session")
def table1():
    return big_table(1)


@pytest.fixture(scope="session")
def table2():
    return big_table(2)


@pytest.fixture(scope="session")
def tables(table1, table2):
    return {1: table1, 2: table2}


_criteria: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(number: int, ok: bool, text: str):
        _criteria.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {text}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criteria, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
