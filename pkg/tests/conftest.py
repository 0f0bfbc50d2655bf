import pytest

ACCEPTANCE_KEY = pytest.StashKey[dict]()


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n].line())
    passed = sum(r.passed for r in results.values())
    terminalreporter.write_line(f"{passed}/{len(results)} criteria passed")
