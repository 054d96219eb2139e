import pytest

CRITERIA = {
    1: "hydrogen reproduction",
    2: "mixed-potential reproduction",
    3: "bound-state criterion",
    4: "normalization closed form vs quadrature",
    5: "Poisson identity property suite",
    6: "duality identity (symbolic + finite difference)",
    7: "erfc accuracy",
    8: "CLI golden files and exit codes",
}

_outcomes: dict[int, list[tuple[str, bool]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _outcomes.setdefault(marker.args[0], []).append((item.name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        results = _outcomes[n]
        ok = all(p for _, p in results)
        failed = [name for name, p in results if not p]
        line = f"criterion {n} [{CRITERIA.get(n, '')}]: {'PASS' if ok else 'FAIL'} ({sum(p for _, p in results)}/{len(results)})"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
