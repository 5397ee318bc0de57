from pathlib import Path

import pytest

from techpark.dataio import format_macro_csv, format_sme_csv
from techpark.oracle import SyntheticSpec, generate

DATA = Path(__file__).parent / "data"


@pytest.fixture
def russia_gdp_path():
    return DATA / "russia_gdp_2010_2013.csv"


@pytest.fixture
def russia_gdp_text(russia_gdp_path):
    return russia_gdp_path.read_text()


@pytest.fixture
def synthetic_files(tmp_path):
    """Noiseless synthetic economy written out as the two CSV inputs."""
    spec = SyntheticSpec()
    macro, sme = generate(spec)
    macro_path = tmp_path / "macro.csv"
    sme_path = tmp_path / "sme.csv"
    macro_path.write_text(format_macro_csv(macro))
    sme_path.write_text(format_sme_csv(sme))
    return spec, macro_path, sme_path


_criteria = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria.append((value, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
