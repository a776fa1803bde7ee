import pytest

from dotnmr import DotConfig, validate_config


@pytest.fixture(scope="session")
def default_cfg() -> DotConfig:
    return validate_config(DotConfig())


def pytest_runtest_logreport(report):
    # one visible pass/fail line per acceptance criterion
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        status = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] {name}: {status}")
