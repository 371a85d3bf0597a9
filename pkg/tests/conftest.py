"""One PASS/FAIL line per acceptance criterion at the end of the run."""

_outcomes = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    number, title = crit
    entry = _outcomes.setdefault(number, [title, True, False])
    if report.failed:
        entry[1] = False
    if report.when == "call":
        entry[2] = True


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        title, ok, ran = _outcomes[number]
        status = "PASS" if ok and ran else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {title}")
