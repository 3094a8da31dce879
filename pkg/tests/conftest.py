"""Shared pytest wiring.

The acceptance module gets a dedicated terminal-summary block: one
PASS/FAIL line per criterion, printed even under captured output, so a
plain `pytest -v` run always shows the gate verdicts at the end.
"""

import pytest

_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in item.nodeid:
        return
    doc = item.function.__doc__ or item.name
    label = doc.strip().splitlines()[0]
    if report.passed:
        verdict = "PASS"
    elif report.skipped:
        verdict = "SKIP"
    else:
        verdict = "FAIL"
    _acceptance_results.append((item.nodeid, verdict, label))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for _, verdict, label in _acceptance_results:
        terminalreporter.write_line(f"{verdict}  {label}")
