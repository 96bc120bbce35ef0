CRITERIA = {
    1: "Dan family intersection Hilbert values and excess",
    2: "X_{2,6} bases, block census, generic rank, critical set",
    3: "X_{3,6} and X_{2,7} block census and critical set",
    4: "low-degree cases satisfy the sufficient criterion",
    5: "Gorenstein suite on every scenario ideal",
    6: "oracle equivalence",
    7: "determinism",
}

_owner = {}
_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


def pytest_collection_modifyitems(config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _owner[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    n = _owner.get(report.nodeid)
    if n is None:
        return
    if report.failed:
        _results.setdefault(n, []).append((report.nodeid, "failed"))
    elif report.when == "call":
        _results.setdefault(n, []).append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        rows = _results.get(n)
        if not rows:
            continue
        bad = [node.split("::")[-1] for node, outcome in rows if outcome == "failed"]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {n}: {status}  {title} ({len(rows) - len(bad)}/{len(rows)} checks)"
        if bad:
            line += "  failing: " + ", ".join(bad)
        tr.write_line(line)
