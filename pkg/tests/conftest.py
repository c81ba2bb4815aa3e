import itertools

import pytest
from hypothesis import strategies as st

from permproj.automata import UNDEFINED, Dfa, run

LETTERS = "abcdefg"


def words(symbols, max_len):
    for k in range(max_len + 1):
        yield from itertools.product(symbols, repeat=k)


def brute_language(d, max_len):
    """Accepted words of length <= max_len, by direct simulation."""
    out = set()
    for w in words(d.symbols, max_len):
        q = run(d, d.initial, w)
        if q is not None and q in d.finals:
            out.add(w)
    return out


def brute_projection(d, gamma, max_len):
    """Projections of the accepted words of length <= max_len."""
    keep = set(gamma)
    return {tuple(x for x in w if x in keep) for w in brute_language(d, max_len)}


@st.composite
def permutation_dfas(draw, min_states=1, max_states=6, min_letters=1, max_letters=3):
    n = draw(st.integers(min_states, max_states))
    k = draw(st.integers(min_letters, max_letters))
    perms = {
        LETTERS[i]: draw(st.permutations(range(n))) for i in range(k)
    }
    initial = draw(st.integers(0, n - 1))
    finals = draw(st.sets(st.integers(0, n - 1)))
    return Dfa.from_permutations(perms, initial, finals)


@st.composite
def dfas(draw, min_states=1, max_states=6, min_letters=1, max_letters=3):
    n = draw(st.integers(min_states, max_states))
    k = draw(st.integers(min_letters, max_letters))
    target = st.one_of(st.just(UNDEFINED), st.integers(0, n - 1))
    table = tuple(tuple(draw(target) for _ in range(n)) for _ in range(k))
    initial = draw(st.integers(0, n - 1))
    finals = draw(st.sets(st.integers(0, n - 1)))
    return Dfa(n, tuple(LETTERS[:k]), table, initial, frozenset(finals))


@st.composite
def dfa_and_gamma(draw, strategy):
    d = draw(strategy)
    gamma = draw(st.sets(st.sampled_from(d.symbols)))
    return d, tuple(s for s in d.symbols if s in gamma)


@pytest.fixture
def bstar_plus():
    """Hand-built minimal automaton for b b*."""
    return Dfa.from_transitions(2, ("b",), [(0, "b", 1), (1, "b", 1)], 0, [1])


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.verdict_lines():
        terminalreporter.write_line(line)
