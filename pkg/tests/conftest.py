from functools import lru_cache

import pytest

from ramify import catalog
from ramify.cdvf import DEFAULT_PRECISION
from ramify.report import load_extension


@lru_cache(maxsize=None)
def built(name: str):
    return load_extension(catalog.get(name), DEFAULT_PRECISION)


@pytest.fixture
def ext():
    return built


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
