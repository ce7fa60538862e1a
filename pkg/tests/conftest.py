"""Print one pass/fail line per acceptance criterion after the test run."""

import pytest

_acceptance_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and "test_acceptance" in item.nodeid:
        _acceptance_results[item.name] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(_acceptance_results):
        verdict = "PASS" if _acceptance_results[name] else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
