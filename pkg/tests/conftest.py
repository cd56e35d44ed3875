import re

import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run fixtures that take minutes to hours")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="slow fixture; pass --slow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def report():
    """Record one acceptance line; the summary prints them after the run."""
    def record(criterion: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((criterion, passed, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    groups: dict[str, list] = {}
    for name, passed, detail in _ACCEPTANCE:
        key = re.match(r"C(\d+)", name).group(1)
        groups.setdefault(key, []).append((name, passed, detail))
    for key in sorted(groups, key=int):
        checks = groups[key]
        good = sum(p for _, p, _ in checks)
        status = "PASS" if good == len(checks) else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status} ({good}/{len(checks)} checks)")
        for name, passed, detail in sorted(checks):
            terminalreporter.write_line(f"    {'ok  ' if passed else 'FAIL'} {name}: {detail}")
