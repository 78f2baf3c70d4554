import pytest

from rightlcm.families import AddingMachine, BS, FreeMonoid, MatrixFamily, NxP


def _all_families():
    return {
        "nxp": NxP([2, 3]),
        "nxp2": NxP([2]),
        "bs": BS(2, 3),
        "matrix": MatrixFamily([[1, 1], [0, 2]]),
        "free": FreeMonoid("ab"),
        "adding": AddingMachine(),
    }


FAMILIES = _all_families()


@pytest.fixture(params=sorted(FAMILIES))
def family(request):
    return FAMILIES[request.param]


@pytest.fixture
def nxp():
    return FAMILIES["nxp"]


@pytest.fixture
def nxp2():
    return FAMILIES["nxp2"]


@pytest.fixture
def bs():
    return FAMILIES["bs"]


@pytest.fixture
def mat():
    return FAMILIES["matrix"]


@pytest.fixture
def free():
    return FAMILIES["free"]


@pytest.fixture
def adding():
    return FAMILIES["adding"]


# -- acceptance summary lines --------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
