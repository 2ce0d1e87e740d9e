import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> list of outcomes, filled by test_acceptance.py tests
_CRITERIA: dict[int, list[bool]] = {}
_NOTES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config._dccodes_notes = _NOTES


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    num = dict(report.user_properties).get("criterion")
    if num is not None:
        _CRITERIA.setdefault(num, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        ok = all(_CRITERIA[num])
        tr.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}")
    for line in _NOTES:
        tr.write_line(line)
