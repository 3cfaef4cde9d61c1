from pathlib import Path

import pytest
from hypothesis import strategies as st

from uniqtree.fixtures import cube_graph, moebius_graph
from uniqtree.graph import Graph

DATA = Path(__file__).parent / "data"


@pytest.fixture
def fig3_g():
    return cube_graph()


@pytest.fixture
def fig4_h():
    return moebius_graph()


@pytest.fixture
def data_dir():
    return DATA


def k2():
    return Graph.from_edges(2, [(0, 1)])


def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


def triangle():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_permutation(draw, min_n=0, max_n=9):
    g = draw(graphs(min_n, max_n))
    p = draw(st.permutations(range(g.n)))
    return g, list(p)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per criterion, then assert it."""

    def record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        print(ACCEPTANCE_LINES[-1])
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
