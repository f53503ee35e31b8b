import pytest

_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        elapsed = dict(report.user_properties).get("elapsed")
        _criteria.append((marker.args[0], report.outcome, elapsed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, elapsed in _criteria:
        status = "PASS" if outcome == "passed" else "FAIL"
        timing = f" ({elapsed:.3f} s)" if elapsed is not None else ""
        terminalreporter.write_line(f"{status}  {label}{timing}")
