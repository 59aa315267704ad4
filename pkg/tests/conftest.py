import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")

from akgraph import generators as gen  # noqa: E402
from akgraph.graph import Graph  # noqa: E402


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = [p for p in pairs if draw(st.booleans())]
    if connected:
        for v in range(1, n):
            chosen.append((draw(st.integers(0, v - 1)), v))
        chosen = sorted(set(chosen))
    return Graph(n, chosen)


@pytest.fixture
def diamond():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])


@pytest.fixture
def k3_corona():
    return gen.corona(gen.complete_graph(3))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
