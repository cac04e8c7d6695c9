import time

import pytest

from powersemigroup.automorphism_lab import SearchConfig, search_automorphisms
from powersemigroup.power_structures import enumerate_window

# criterion number -> (passed, description); filled in as acceptance tests finish
CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        CRITERIA[number] = (report.passed, text)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        passed, text = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {text}")


class TimedSearches:
    """Runs each window search once per session and remembers how long it took."""

    def __init__(self):
        self._cache = {}

    def __call__(self, s, bound, reduced=False, mode="filtered"):
        key = (s, bound, reduced, mode)
        if key not in self._cache:
            start = time.perf_counter()
            carrier = enumerate_window(s, bound, reduced)
            report = search_automorphisms(carrier, SearchConfig.for_mode(mode))
            self._cache[key] = (report, time.perf_counter() - start)
        return self._cache[key]


@pytest.fixture(scope="session")
def timed_search():
    return TimedSearches()
