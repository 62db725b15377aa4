from __future__ import annotations

from itertools import combinations

import pytest

from lexshell import build_poset, pentagon
from lexshell.constructions import build_graded_example, load_hachimori, load_ungraded_example
from lexshell.simplicial import SimplicialComplex


def boolean_lattice(n: int):
    """B_n with elements named by their sorted digits; the empty set is ``bot``."""
    def name(s):
        return "".join(map(str, s)) or "bot"

    ground = range(1, n + 1)
    covers = []
    for k in range(n):
        for s in combinations(ground, k):
            for i in ground:
                if i not in s:
                    covers.append((name(s), name(tuple(sorted(s + (i,))))))
    return build_poset(covers)


def standard_labels(p):
    """Label S -> S + {i} by i."""
    out = {}
    for u, v in p.covers:
        added = set(v) - set("" if u == "bot" else u)
        out[(u, v)] = int(added.pop())
    return out


@pytest.fixture
def pent():
    return pentagon()


@pytest.fixture
def chain2():
    return build_poset([("bot", "top")])


@pytest.fixture
def b2():
    return boolean_lattice(2)


@pytest.fixture
def b3():
    return boolean_lattice(3)


@pytest.fixture
def triangle_boundary():
    return SimplicialComplex([("1", "2"), ("2", "3"), ("1", "3")])


@pytest.fixture(scope="session")
def hachimori():
    return load_hachimori()


@pytest.fixture(scope="session")
def graded_p(hachimori):
    return build_graded_example(hachimori)


@pytest.fixture(scope="session")
def ungraded():
    return load_ungraded_example()


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
