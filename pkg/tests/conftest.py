from collections import defaultdict

import pytest

_results = defaultdict(list)
_titles = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(number, title): marks a test as an acceptance criterion")


def pytest_itemcollected(item):
    m = item.get_closest_marker("acceptance")
    if m is not None:
        _titles[m.args[0]] = m.args[1]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("acceptance")
    if m is not None:
        outcome.get_result().acceptance = m.args[0]


def pytest_runtest_logreport(report):
    number = getattr(report, "acceptance", None)
    if number is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _results[number].append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _titles:
        return
    terminalreporter.section("ACCEPTANCE")
    for number in sorted(_titles):
        runs = _results.get(number, [])
        status = "NOT RUN" if not runs else ("PASS" if all(runs) else "FAIL")
        terminalreporter.write_line(f"criterion {number}: {status}  {_titles[number]}")
