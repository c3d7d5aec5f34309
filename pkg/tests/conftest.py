import time

import pytest

_RESULTS: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        number, title = marker.args
        entry = _RESULTS.setdefault(number, {"title": title, "ok": True, "seconds": 0.0, "ran": False})
        entry["seconds"] += time.perf_counter() - start
        entry["ran"] = True


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    number = dict(report.user_properties).get("criterion")
    if number is None:
        return
    entry = _RESULTS.setdefault(number, {"title": "", "ok": True, "seconds": 0.0, "ran": False})
    if report.failed:
        entry["ok"] = False


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            item.user_properties.append(("criterion", marker.args[0]))
            _RESULTS.setdefault(
                marker.args[0], {"title": marker.args[1], "ok": True, "seconds": 0.0, "ran": False}
            )


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        entry = _RESULTS[number]
        status = "FAIL" if not entry["ok"] else ("PASS" if entry["ran"] else "NOT RUN")
        terminalreporter.write_line(
            f"criterion {number}: {status}  {entry['title']}  ({entry['seconds']:.1f}s)"
        )
