import pytest

_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        cid, title = marker.args
        _results.append((cid, "PASS" if report.passed else "FAIL", title))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for cid, status, title in sorted(_results):
        terminalreporter.write_line(f"[{cid:2d}] {status} {title}")
