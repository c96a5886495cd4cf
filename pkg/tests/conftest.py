import random
import sys

import pytest
from hypothesis import settings, strategies as st

from gendef import Dfa
from gendef.oracle import letter_names

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def a1():
    # a a*, unary
    return Dfa(2, ["a"], [[1], [1]], 0, [1])


def a2():
    # words starting with a
    return Dfa(3, ["a", "b"], [[1, 2], [1, 1], [2, 2]], 0, [1])


def a3():
    # even number of a
    return Dfa(2, ["a", "b"], [[1, 0], [0, 1]], 0, [0])


def a5():
    # ends with a
    return Dfa(2, ["a", "b"], [[1, 0], [1, 0]], 0, [1])


def a6():
    return Dfa(3, ["a", "b"], [[1, 1], [1, 2], [1, 2]], 0, [1])


@pytest.fixture
def A1():
    return a1()


@pytest.fixture
def A2():
    return a2()


@pytest.fixture
def A3():
    return a3()


@pytest.fixture
def A5():
    return a5()


@pytest.fixture
def A6():
    return a6()


@st.composite
def dfas(draw, max_states=5, max_letters=2):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_letters))
    delta = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k), min_size=n, max_size=n))
    finals = draw(st.sets(st.integers(0, n - 1)))
    start = draw(st.integers(0, n - 1))
    return Dfa(n, letter_names(k), delta, start, finals)


def random_dfa(seed, n, k=2):
    rng = random.Random(seed)
    delta = [[rng.randrange(n) for _ in range(k)] for _ in range(n)]
    return Dfa(n, letter_names(k), delta, 0, [q for q in range(n) if rng.random() < 0.5])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
