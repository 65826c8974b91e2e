import time

import pytest
from hypothesis import settings

import acceptance_state as state
from wgideal.coxeter import cached_system

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def A2():
    return cached_system("A2")


@pytest.fixture(scope="session")
def A3():
    return cached_system("A3")


@pytest.fixture(scope="session")
def B3():
    return cached_system("B3")


def pytest_sessionstart(session):
    state.SESSION_START = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - state.SESSION_START
    if 10 in state.RESULTS:
        name, ok, detail = state.RESULTS[10]
        within = elapsed < state.SUITE_LIMIT_SECONDS
        state.RESULTS[10] = (name, ok and within,
                             f"{detail}; whole suite {elapsed:.1f}s (limit {state.SUITE_LIMIT_SECONDS}s)")
        if not within:
            session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not state.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(state.RESULTS):
        name, ok, detail = state.RESULTS[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {k:>2}. {name}: {detail}")
