from __future__ import annotations

import pytest

_CRITERIA: dict[int, dict] = {}


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run the larger enumeration checks (L7, L8, M6)")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, {"title": title, "passed": 0, "failed": 0, "skipped": 0})
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if rep.skipped:
            entry["skipped"] += 1
        elif rep.failed:
            entry["failed"] += 1
        else:
            entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        if e["failed"]:
            status = "FAIL"
        elif e["passed"]:
            status = "PASS"
        else:
            status = "SKIP"
        note = f"  ({e['skipped']} slow check(s) not run, use --runslow)" if e["skipped"] and status == "PASS" else ""
        terminalreporter.write_line(f"[{status}] {number:2d}. {e['title']}{note}")
