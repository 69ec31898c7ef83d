import pytest

from supergraphs.catalog import catalog, get_group

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture(scope="session")
def small_groups():
    """Catalog groups up to order 64, constructed once."""
    return [get_group(e.name) for e in catalog(64)]


def by_label(G, label):
    return G.labels.index(label)
