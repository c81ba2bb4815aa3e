import pytest
from hypothesis import given, settings

from conftest import brute_language, brute_projection, dfa_and_gamma, dfas, permutation_dfas
from permproj.automata import (
    AutomatonError,
    Dfa,
    canonical,
    equivalent,
    is_initially_connected,
    is_permutation_dfa,
    minimize,
)
from permproj.orbits import orbit_partition
from permproj.projection import (
    check_state_partition,
    project,
    project_oracle,
    unobservability_stats,
)
from permproj.witness import (
    WITNESS_GAMMA,
    example_commutative,
    example_group,
    make_witness,
    remark_state_partition,
)


def test_example_group_projection(bstar_plus):
    p = project(example_group(), ["b"])
    assert p.subset_labels() == [(0, 1), (0, 1, 2)]
    assert p.dfa.table == ((1, 1),)
    assert equivalent(p.dfa, bstar_plus).equal
    assert equivalent(project_oracle(example_group(), ["b"]), bstar_plus).equal
    assert not is_permutation_dfa(minimize(p.dfa))


def test_full_alphabet_gives_singletons():
    w = make_witness(6, 2)
    p = project(w, w.symbols)
    assert all(len(s) == 1 for s in p.subsets)
    assert p.state_count == w.state_count
    assert equivalent(p.dfa, w).equal


def test_remark_projection_subsets():
    r = remark_state_partition()
    p = project(r, ["b"])
    assert [{r.label(q) for q in s} for s in p.subsets] == [{"1", "2", "3", "4"}, {"5", "6", "7", "8"}]


def test_empty_gamma():
    g = example_group()
    p = project(g, [])
    assert p.dfa.symbols == ()
    assert p.subsets == (frozenset({0, 1, 2}),)
    assert p.dfa.accepts(())


def test_unknown_gamma_symbol():
    with pytest.raises(AutomatonError):
        project(example_group(), ["z"])
    with pytest.raises(AutomatonError):
        project_oracle(example_group(), ["z"])


def test_empty_subset_becomes_sink():
    d = Dfa.from_transitions(2, ("a", "b"), [(0, "a", 1)], 0, [1])
    p = project(d, ["a"])
    assert frozenset() in p.subsets
    sink = p.subsets.index(frozenset())
    assert sink not in p.dfa.finals
    assert minimize(p.dfa).state_count == 2


def test_oracle_witness_n4_m1():
    assert minimize(project_oracle(make_witness(4, 1), WITNESS_GAMMA)).state_count == 7


def test_unobservability_stats():
    for n, m in [(4, 1), (7, 2), (10, 4)]:
        assert unobservability_stats(make_witness(n, m), WITNESS_GAMMA).m == 2 * m
    loops = Dfa.from_transitions(2, ("a", "x"), [(0, "x", 0), (1, "x", 1), (0, "a", 1), (1, "a", 0)], 0, [])
    assert unobservability_stats(loops, ["a"]).m == 0
    s = unobservability_stats(example_group(), ["b"])
    assert s.m == 2 and s.incident_states == {0, 1} and s.quiet_states == {2}
    assert s.delta_letters == ("a",)


def test_state_partition_examples():
    r = remark_state_partition()
    assert check_state_partition(r, ["b"]).is_state_partition
    e = example_commutative()
    v = check_state_partition(e, ["a"])
    assert not v.is_state_partition and not v.disjoint and v.covers_all_states
    a, b = v.offending_pair
    assert ({e.label(q) for q in a}, {e.label(q) for q in b}) == ({"q_eps", "q_b"}, {"q_a", "q_b"})
    assert check_state_partition(make_witness(6, 2), make_witness(6, 2).symbols)


@settings(max_examples=300, deadline=None)
@given(dfa_and_gamma(dfas(max_states=6)))
def test_connected_input_is_always_covered(case):
    # every state is reached by some word, so the projection of that word reaches it
    d, gamma = case
    d = canonical(d)
    v = check_state_partition(d, gamma)
    assert v.covers_all_states
    assert (v.offending_pair is None) == v.disjoint
    if v.offending_pair:
        assert v.offending_pair[0] & v.offending_pair[1]


def test_state_partition_needs_connected_input():
    d = Dfa.from_transitions(2, ("a",), [(0, "a", 0)], 0, [0])
    with pytest.raises(AutomatonError):
        check_state_partition(d, ["a"])


@settings(max_examples=300, deadline=None)
@given(dfa_and_gamma(dfas(max_states=6)))
def test_oracle_agrees_general(case):
    d, gamma = case
    p = project(d, gamma)
    v = equivalent(p.dfa, project_oracle(d, gamma))
    assert v.equal, v.witness


@settings(max_examples=150, deadline=None)
@given(dfa_and_gamma(dfas(max_states=4, max_letters=2)))
def test_projection_contains_brute_force_images(case):
    d, gamma = case
    p = project(d, gamma).dfa
    for w in brute_projection(d, gamma, 6):
        assert p.accepts(w)


@settings(max_examples=300, deadline=None)
@given(dfa_and_gamma(permutation_dfas(max_states=7)))
def test_permutation_subsets_are_orbit_unions(case):
    d, gamma = case
    p = project(d, gamma)
    delta = [s for s in d.symbols if s not in gamma]
    part = orbit_partition(d, delta)
    for s in p.subsets:
        assert s
        for q in s:
            assert part.blocks[part.block_of[q]] <= s


@settings(max_examples=300, deadline=None)
@given(dfa_and_gamma(permutation_dfas(max_states=7)))
def test_state_partition_implies_small_projection(case):
    d, gamma = case
    if not is_initially_connected(d):
        return
    if check_state_partition(d, gamma).is_state_partition:
        assert minimize(project(d, gamma).dfa).state_count <= d.state_count


def test_brute_language_helper_agrees_on_example():
    e = example_commutative()
    lang = brute_language(e, 4)
    assert all(w.count("a") == 0 or w.count("b") > 0 for w in lang)
    assert ("a", "a") not in lang and ("a", "b") in lang
