from __future__ import annotations

import pytest
from hypothesis import strategies as st

from nestwork.bijections import IntervalProfile, beta_inv
from nestwork.diagram import Diagram

ACCEPTANCE_LINES: list[str] = []


@st.composite
def partitions(draw, max_n: int = 12) -> Diagram:
    """Random partition diagram drawn through a restricted growth string."""
    n = draw(st.integers(0, max_n))
    word: list[int] = []
    top = -1
    for _ in range(n):
        b = draw(st.integers(0, top + 1))
        top = max(top, b)
        word.append(b)
    last: dict[int, int] = {}
    arcs = []
    for v, b in enumerate(word, start=1):
        if b in last:
            arcs.append((last[b], v))
        last[b] = v
    return Diagram(n, tuple(arcs))


@st.composite
def matchings(draw, max_n: int = 14) -> Diagram:
    n = draw(st.integers(0, max_n))
    free = list(range(1, n + 1))
    free = draw(st.permutations(free))
    pairs = draw(st.integers(0, n // 2))
    arcs = [tuple(sorted(free[2 * t:2 * t + 2])) for t in range(pairs)]
    return Diagram(n, tuple(arcs))


@st.composite
def profiles(draw, max_intervals: int = 5, max_total: int = 6) -> IntervalProfile:
    s = draw(st.integers(1, max_intervals))
    blocks = [
        tuple(draw(st.integers(0, 2)) for _ in range(s - i))
        for i in range(s)
    ]
    flat_total = sum(map(sum, blocks))
    if flat_total > max_total:
        blocks = [tuple(0 for _ in b) for b in blocks]
    return IntervalProfile(tuple(blocks))


def r_matchings(**kw):
    """Matchings avoiding neighbor alignments and both neighbor nestings."""
    return profiles(**kw).map(beta_inv)


@pytest.fixture
def acceptance_line():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
