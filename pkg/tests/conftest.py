import pytest

from pathbench import Graph, ProblemInstance, parse_graph

TWO_ROUTE_TEXT = "4 4 5\n1 2 2 1\n1 3 1 5\n2 3 1 1\n3 4 1 1\n"
ONE_EDGE_TEXT = "2 1 0\n1 2 7 2\n"

# Filled by the acceptance module; printed once capture is torn down so
# the scoreboard survives pytest's fd-level output capture.
CRITERION_RESULTS = []


def pytest_terminal_summary(terminalreporter, exitstatus):
    if not CRITERION_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, ok in CRITERION_RESULTS:
        terminalreporter.write_line(("PASS  " if ok else "FAIL  ") + name)


@pytest.fixture
def two_route() -> ProblemInstance:
    """1 -> 4 either via 2 -> 3 (weight 4, delay 3) or via 3 (weight 2, delay 6)."""
    return parse_graph(TWO_ROUTE_TEXT)


@pytest.fixture
def one_edge() -> ProblemInstance:
    """Single edge 1 -> 2, weight 7, delay 2."""
    return parse_graph(ONE_EDGE_TEXT)


@pytest.fixture
def loop_pair() -> Graph:
    """Hub 2 with two 2-cycles (via 3 and via 4) and a tail to 5, unit weights."""
    return Graph(5, [(1, 2, 1, 0), (2, 3, 1, 0), (3, 2, 1, 0),
                     (2, 4, 1, 0), (4, 2, 1, 0), (2, 5, 1, 0)])
