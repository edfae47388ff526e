import pytest

from nilclass2.linalg import GF, QQ

FIELDS = [QQ, GF(2), GF(3), GF(5)]
FINITE_FIELDS = [GF(2), GF(3), GF(5)]

CRITERIA = {
    "test_c1_multiplier_formula": "1 Schur-multiplier corollary",
    "test_c2_exterior_center": "2 exterior-center theorem",
    "test_c3_extension_identity": "3 extension identity",
    "test_c4_round_trip": "4 classification round trip",
    "test_c5_irredundancy": "5 irredundancy sweep",
    "test_c6_completeness": "6 completeness sampling",
    "test_c7_properties": "7 property suites",
}

_outcomes: dict[str, str] = {}


@pytest.fixture(params=FIELDS, ids=str)
def field(request):
    return request.param


@pytest.fixture(params=FINITE_FIELDS, ids=str)
def finite_field(request):
    return request.param


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name not in CRITERIA:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in _outcomes:
            verdict = "PASS" if _outcomes[name] == "passed" else "FAIL"
            tr.write_line(f"criterion {label}: {verdict}")
