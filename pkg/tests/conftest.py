import pytest

from tmk.fan import mpcp_refine
from tmk.ideal import LambdaParam, main_superpotential
from tmk.pipelines import build_instance


@pytest.fixture(scope="session")
def main_instance():
    return build_instance(3)


@pytest.fixture(scope="session")
def mpcp_fan(main_instance):
    return mpcp_refine(main_instance.normal)


@pytest.fixture(scope="session")
def small_instance():
    return build_instance(2, var_offset=1)


@pytest.fixture(scope="session")
def w2():
    return main_superpotential(LambdaParam(2))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
