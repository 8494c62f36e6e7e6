import pytest

from modwb.forms import delta_qexp
from modwb.siegel import build_chi

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, text = marker.args
    failed = report.failed
    passed = report.passed and report.when == "call"
    prev = _CRITERIA.get(n, (text, None))
    if failed:
        _CRITERIA[n] = (text, False)
    elif passed and prev[1] is None:
        _CRITERIA[n] = (text, True)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        text, ok = _CRITERIA[n]
        status = "PASS" if ok else ("FAIL" if ok is False else "NOT RUN")
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {text}")


@pytest.fixture(scope="session")
def delta_2000():
    return delta_qexp(2000)


@pytest.fixture(scope="session")
def chi10():
    return build_chi(10, 240)


@pytest.fixture(scope="session")
def chi12():
    return build_chi(12, 225)
