import pytest

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            n, title = mark.args
            _criteria.setdefault(n, {"title": title, "passed": True, "seen": 0})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    entry = _criteria[mark.args[0]]
    if report.when == "call":
        entry["seen"] += 1
    if report.failed or report.skipped:
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        ok = e["passed"] and e["seen"] > 0
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {e['title']}")
