import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    _acceptance.setdefault(crit, []).append((report.nodeid.split("::")[-1], report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance):
        checks = _acceptance[crit]
        ok = all(passed for _, passed in checks)
        terminalreporter.write_line(f"{crit}: {'PASS' if ok else 'FAIL'}")
        for name, passed in checks:
            terminalreporter.write_line(f"    {'pass' if passed else 'FAIL'}  {name}")
