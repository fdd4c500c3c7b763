from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from subdp.graph import (
    bidirectional_cycle,
    build_bidirectional,
    build_graph,
    directed_cycle,
    hypercube,
    petersen_graph,
)

ACCEPTANCE_LINES: list[str] = []

# antipodal pairs of the 3-cube share a color
Q3_ANTIPODAL = {0b000: 1, 0b111: 1, 0b001: 2, 0b110: 2, 0b010: 3, 0b101: 3, 0b100: 4, 0b011: 4}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def q3():
    return hypercube(3)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def c4bi():
    return bidirectional_cycle(4)


@pytest.fixture
def c5di():
    return directed_cycle(5)


@pytest.fixture
def k4_pendant():
    """K_4 on 0..3 with pendant node 4 attached to node 0."""
    return build_bidirectional(5, [*combinations(range(4), 2), (0, 4)])


@st.composite
def digraphs(draw, min_n=1, max_n=7, bidirectional=None):
    n = draw(st.integers(min_n, max_n))
    if bidirectional is None:
        bidirectional = draw(st.booleans())
    if bidirectional:
        pairs = list(combinations(range(n), 2))
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return build_bidirectional(n, [p for p, k in zip(pairs, keep) if k])
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])
