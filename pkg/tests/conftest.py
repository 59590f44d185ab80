import pytest

_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    num = int(name.split("_")[2])
    detail = dict(report.user_properties).get("detail", "")
    if report.failed:
        _criteria[num] = ("FAIL", detail or str(report.longrepr).splitlines()[-1][:160])
    elif report.when == "call":
        _criteria[num] = ("PASS" if report.passed else "SKIP", detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        verdict, detail = _criteria[num]
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {detail}")


@pytest.fixture
def detail(record_property):
    """Attach a one-line summary to the acceptance report for this test."""
    def put(text):
        record_property("detail", text)
    return put
