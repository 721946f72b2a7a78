import pytest

# criterion number -> (description, outcome); filled while the acceptance tests run
_ACCEPTANCE: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _ACCEPTANCE[m.args[0]] = [m.args[1], "NOT RUN"]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    entry = _ACCEPTANCE[m.args[0]]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        entry[1] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        text, status = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")
