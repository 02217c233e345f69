import pytest

from gbcanon.digraphs import DigraphStack, LabelledDigraph
from gbcanon.laws import GAMMA1_EDGES, GAMMA2_EDGES, g8
from gbcanon.objects import CombinatorialObject


@pytest.fixture
def G8():
    return g8()


@pytest.fixture
def gamma1():
    return DigraphStack(8, [LabelledDigraph.from_edges(8, GAMMA1_EDGES)])


@pytest.fixture
def gamma2():
    return DigraphStack(8, [LabelledDigraph.from_edges(8, GAMMA2_EDGES)])


@pytest.fixture
def gamma_graph():
    return CombinatorialObject.graph(8, GAMMA2_EDGES)


_LINES_KEY = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line and fail the test when the criterion is not met."""
    lines = request.config.stash.setdefault(_LINES_KEY, [])

    def report(tag: str, ok: bool, detail: str) -> None:
        line = f"{tag:<5} {'PASS' if ok else 'FAIL'}  {detail}"
        lines.append(line)
        print(line)
        assert ok, line
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
