import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")
    config._criteria_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        status = "PASS" if report.passed else "FAIL"
        number, title = marker.args
        item.config._criteria_results.append((number, title, status, report.duration))


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_criteria_results", [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(results):
        terminalreporter.write_line(f"{status}  criterion {number}: {title} ({duration:.2f} s)")
