import itertools

import pytest
from hypothesis import strategies as st

from nilhecke import build_group


def cayley_distances(g, radius):
    """Word length by breadth-first search in the Cayley graph.

    Uses only matrix multiplication by generators, never the descent test.
    """
    gens = g.generators
    dist = {g.identity: 0}
    frontier = [g.identity]
    for d in range(1, radius + 1):
        nxt = []
        for w in frontier:
            for s in gens:
                y = w * s
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def brute_reduced_words(g, a, dist):
    """All reduced words of a by trying every word of length |a|."""
    n = dist[a]
    out = []
    for word in itertools.product(range(1, g.rank + 1), repeat=n):
        if g.from_word(word) == a:
            out.append(word)
    return out


def words(rank, max_size):
    return st.lists(st.integers(1, rank), max_size=max_size)


@pytest.fixture(scope="session")
def A2():
    return build_group("A2")


@pytest.fixture(scope="session")
def B2():
    return build_group("B2")


@pytest.fixture(scope="session")
def affA1():
    return build_group("affine:A1")


@pytest.fixture(scope="session")
def affA2():
    return build_group("affine:A2")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", None) == "call" and "test_acceptance.py" in rep.nodeid:
                lines.append((rep.nodeid.split("::", 1)[1], outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
