import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    reports = []
    for key in ("passed", "failed", "error"):
        reports.extend(r for r in terminalreporter.stats.get(key, [])
                       if getattr(r, "when", None) == "call")
    acceptance = sorted(
        (r for r in reports if "test_acceptance.py::" in r.nodeid),
        key=lambda r: r.nodeid,
    )
    if not acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for r in acceptance:
        status = "PASS" if r.passed else "FAIL"
        terminalreporter.write_line(f"{status} {r.nodeid.split('::')[-1]}")
