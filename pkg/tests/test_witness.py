import pytest

from permproj.automata import is_initially_connected, is_permutation_dfa, minimize, trim
from permproj.cycles import format_cycles
from permproj.orbits import orbit_partition
from permproj.projection import project, project_oracle, unobservability_stats
from permproj.witness import WITNESS_GAMMA, builtin, make_witness


def cycles(d, sym):
    return format_cycles(d.table[d.symbol_index(sym)], d.label)


def test_witness_n8_m3_letters():
    w = make_witness(8, 3)
    assert {s: cycles(w, s) for s in w.symbols} == {
        "a": "(1,2)(3,4)(5,6)",
        "b": "(7,8)",
        "c": "(7,8)",
        "d": "(1,3)(2,4)",
        "e": "(1,3,5)(2,4,6)",
        "f": "(1,8)",
        "g": "(1,8)(2,7)",
    }
    assert w.label(w.initial) == "8" and {w.label(q) for q in w.finals} == {"8"}


def test_witness_n4_m1_letters():
    w = make_witness(4, 1)
    assert {s: cycles(w, s) for s in w.symbols} == {
        "a": "(1,2)", "b": "(3,4)", "c": "(3,4)", "d": "()", "e": "()",
        "f": "(1,4)", "g": "(1,4)(2,3)",
    }


@pytest.mark.parametrize("n,m", [(0, 1), (3, 1), (5, 2), (6, 0)])
def test_witness_parameter_errors(n, m):
    with pytest.raises(ValueError):
        make_witness(n, m)


@pytest.mark.parametrize("n,m", [(4, 1), (5, 1), (6, 2), (7, 2), (8, 3), (9, 3), (10, 4), (9, 2)])
def test_witness_structure(n, m):
    w = make_witness(n, m)
    assert is_permutation_dfa(w) and is_initially_connected(w) and w.finals
    assert trim(w) == w
    assert unobservability_stats(w, WITNESS_GAMMA).m == 2 * m
    blocks = [sorted(int(w.label(q)) for q in b) for b in orbit_partition(w, ["a"]).blocks]
    assert blocks == [[i, i + 1] for i in range(1, 2 * m, 2)] + [[i] for i in range(2 * m + 1, n + 1)]


@pytest.mark.parametrize("n,m", [(4, 1), (5, 1), (6, 1), (6, 2), (7, 2), (8, 3), (9, 2), (10, 4)])
def test_witness_tight(n, m):
    w = make_witness(n, m)
    assert minimize(project(w, WITNESS_GAMMA).dfa).state_count == 2 ** (n - m) - 1
    assert minimize(project_oracle(w, WITNESS_GAMMA)).state_count == 2 ** (n - m) - 1


def test_builtins():
    g, gamma = builtin("example_group")
    assert g.state_count == 3 and g.finals == {2} and gamma == ("b",) and is_permutation_dfa(g)
    e, _ = builtin("example_commutative")
    assert e.state_count == 3 and {e.label(q) for q in e.finals} == {"q_eps", "q_b"}
    r, gamma = builtin("remark_state_partition")
    assert r.state_count == 8 and r.label(r.initial) == "1" and r.finals == {0} and gamma == ("b",)
    with pytest.raises(KeyError):
        builtin("nope")
