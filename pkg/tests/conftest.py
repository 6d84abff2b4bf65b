from functools import lru_cache

import pytest

from farflats import Workspace

ACCEPTANCE = {}


@lru_cache(maxsize=None)
def workspace(symbol, max_codim=None):
    return Workspace(symbol, max_codim=max_codim)


@pytest.fixture(scope="session")
def ws():
    return workspace


@pytest.fixture
def record():
    """record(criterion, ok, detail) -> stores a line for the terminal summary."""
    def _record(criterion, ok, detail=""):
        prev = ACCEPTANCE.get(criterion)
        if prev is not None:
            ok = ok and prev[0]
            detail = f"{prev[1]}; {detail}" if detail else prev[1]
        ACCEPTANCE[criterion] = (ok, detail)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_addoption(parser):
    parser.addoption("--run-extended", action="store_true", help="run long checks marked 'extended'")


def pytest_collection_modifyitems(config, items):
    import os
    if config.getoption("--run-extended") or os.environ.get("FARFLATS_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended check; use --run-extended or FARFLATS_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)
