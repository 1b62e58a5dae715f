from pathlib import Path

import pytest

from flames import read_graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return read_graph(FIXTURES / f"{name}.graph")


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / f"{name}.graph"


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
