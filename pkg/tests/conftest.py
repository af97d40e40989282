import re

import pytest

from a1score.metric import AlgorithmProfile

_acceptance = {}


@pytest.fixture
def worked_x():
    """Time n, space n log n; same product as worked_y."""
    return AlgorithmProfile.from_text("X", "n", "n log n")


@pytest.fixture
def worked_y():
    return AlgorithmProfile.from_text("Y", "log n", "n^2")


@pytest.fixture
def stable_x():
    return AlgorithmProfile.from_text("X", "n", "log n")


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.failed:
        if report.failed or key not in _acceptance:
            _acceptance[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), outcome in sorted(_acceptance.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {status}  {name}")
