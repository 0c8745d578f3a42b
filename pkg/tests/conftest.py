import pytest

_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    out = yield
    rep = out.get_result()
    mod = getattr(item, "module", None)
    if mod is not None and getattr(mod, "__name__", "") == "test_acceptance":
        if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
            _acceptance[item.name] = rep.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name in sorted(_acceptance):
        status = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{name}: {status}")
