import re

import pytest

from helpers import g


@pytest.fixture
def g1():
    """Grammar for a*b: S' -> a S' | b."""
    return g("start: S'\nS' -> a S' | b\n")


def pytest_runtest_logreport(report):
    # a criterion that raises before recording still gets its FAIL line
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not (m and report.when == "call" and report.failed):
        return
    import test_acceptance

    tag = f"criterion {m.group(1)}:"
    if not any(tag in line for line in test_acceptance.RESULTS):
        reason = report.longrepr.reprcrash.message if hasattr(report.longrepr, "reprcrash") else "error"
        test_acceptance.RESULTS.append(f"FAIL {tag} raised {reason}")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
