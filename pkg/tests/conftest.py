import pytest

from pi26 import load_table

_acceptance: dict[str, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def table():
    return load_table()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num, title = marker.args
    key = f"{num}"
    prev = _acceptance.get(key, ("PASS", title))[0]
    if rep.when == "call" or rep.failed:
        status = "PASS" if (rep.passed and prev == "PASS") else "FAIL"
        _acceptance[key] = (status, _acceptance.get(key, (None, title))[1])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_acceptance, key=lambda k: (int(k.split(".")[0]), k)):
        status, title = _acceptance[key]
        terminalreporter.write_line(f"{status}  criterion {key:>4}  {title}")
