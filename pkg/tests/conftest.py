import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    detail = dict(report.user_properties).get("detail", "")
    status = "PASS" if report.passed else "FAIL"
    item.config._criteria.append((number, status, title, report.duration, detail))


def pytest_terminal_summary(terminalreporter, config):
    rows = sorted(config._criteria)
    if not rows:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, status, title, duration, detail in rows:
        line = f"[{status}] criterion {number:>2}: {title} ({duration:.2f}s)"
        if detail:
            line += f" - {detail}"
        terminalreporter.write_line(line)
