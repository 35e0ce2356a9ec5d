import pytest

_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")
    config.stash[_KEY] = {}


@pytest.fixture
def note(request):
    """Attach a detail line to the acceptance summary of the current criterion."""
    marker = request.node.get_closest_marker("criterion")
    notes = request.config.stash[_KEY]

    def add(text):
        if marker is not None:
            notes.setdefault(marker.args[0], {"title": marker.args[1], "outcome": None, "notes": []})
            notes[marker.args[0]]["notes"].append(text)
    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    entry = item.config.stash[_KEY].setdefault(
        marker.args[0], {"title": marker.args[1], "outcome": None, "notes": []})
    entry["outcome"] = "PASS" if report.passed else "FAIL"
    entry["duration"] = report.duration


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash[_KEY]
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        entry = results[number]
        outcome = entry["outcome"] or "NOT RUN"
        took = f" ({entry['duration']:.1f}s)" if "duration" in entry else ""
        terminalreporter.write_line(f"criterion {number}: {outcome}  {entry['title']}{took}")
        for line in entry["notes"]:
            terminalreporter.write_line(f"    {line}")
