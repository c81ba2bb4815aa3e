"""Acceptance criteria, one test each, with a one-line verdict per criterion.

The verdict lines are printed in the pytest terminal summary, or directly when
this file is run as a script.
"""

import functools

import numpy as np

from permproj.algebra import Normality, is_normal_subgroup, orbits_are_permuted
from permproj.automata import Dfa, canonical, equivalent, is_permutation_dfa, minimize
from permproj.commutative import project_commutative_language, project_commuting, split_commutes
from permproj.explorer import (
    gammas,
    random_commutative_permutation_dfa,
    random_commuting_split_dfa,
    random_permutation_dfa,
    scan,
    witness_sweep,
)
from permproj.projection import check_state_partition, project, project_oracle
from permproj.witness import WITNESS_GAMMA, example_commutative, example_group, make_witness, remark_state_partition
from properties import CASES, SUITES

RESULTS: dict[int, str] = {}
WITNESS_PAIRS = [(4, 1), (5, 1), (6, 2), (7, 2), (8, 3)]


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except Exception as exc:
                first = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
                RESULTS[number] = f"criterion {number} FAIL: {title}: {first}"
                raise
            RESULTS[number] = f"criterion {number} PASS: {title}" + (f" ({detail})" if detail else "")
        return run
    return wrap


@functools.cache
def exhaustive_reports():
    return scan("exhaustive", n_min=3, n_max=3, letters=2)


@functools.cache
def permutation_reports():
    return scan("random", kind="permutation", n_min=1, n_max=7, letters=3, samples=1000, seed=2024)


@functools.cache
def general_reports():
    return scan("random", kind="general", n_min=2, n_max=6, letters=3, samples=500, seed=2025)


@criterion(1, "witness tightness")
def test_c1_witness_tightness():
    sizes = [minimize(project(make_witness(n, m), WITNESS_GAMMA).dfa).state_count
             for n, m in WITNESS_PAIRS]
    assert sizes == [7, 15, 15, 31, 31], sizes
    assert all(r.verdict == "pass" for r in witness_sweep(WITNESS_PAIRS))
    return "sizes " + " ".join(map(str, sizes))


@criterion(2, "permutation upper bound")
def test_c2_permutation_bound():
    exhaustive = exhaustive_reports()
    rand = permutation_reports()
    # 6^2 action pairs, 3 starts, 8 final sets, 2 observable alphabets
    assert len(exhaustive) == 36 * 3 * 8 * 2
    assert len({r.id // 3 for r in rand}) == 1000
    for r in exhaustive + rand:
        assert r.is_permutation and r.perm_bound is not None
        assert r.proj_min <= r.perm_bound, r
    return f"{len(exhaustive)} exhaustive + {len(rand)} random reports"


@criterion(3, "general bound")
def test_c3_general_bound():
    reports = general_reports()
    assert len({r.id // 3 for r in reports}) == 500
    for r in reports:
        assert r.n <= 6 and r.m >= 1
        assert r.proj_min <= r.general_bound, r
    return f"{len(reports)} reports"


@criterion(4, "oracle equivalence")
def test_c4_oracle_equivalence():
    count = 0
    for n, m in WITNESS_PAIRS:
        w = make_witness(n, m)
        assert equivalent(project(w, WITNESS_GAMMA).dfa, project_oracle(w, WITNESS_GAMMA)).equal
        count += 1
    # the scans compare against the oracle on every report and raise on disagreement
    for reports in (exhaustive_reports(), permutation_reports(), general_reports()):
        count += len(reports)
    return f"{count} projections"


@criterion(5, "worked examples")
def test_c5_worked_examples():
    g = example_group()
    p = minimize(project(g, ["b"]).dfa)
    bstar_plus = Dfa.from_transitions(2, ("b",), [(0, "b", 1), (1, "b", 1)], 0, [1])
    assert p.state_count == 2 and not is_permutation_dfa(p)
    assert equivalent(p, bstar_plus).equal

    e = example_commutative()
    for letter in ("a", "b"):
        out = project_commutative_language(e, [letter])
        assert out.state_count <= 3
        assert minimize(out).state_count == 1

    r = remark_state_partition()
    assert check_state_partition(r, ["b"]).is_state_partition
    assert not orbits_are_permuted(r, ["a"])

    assert not check_state_partition(e, ["a"]).is_state_partition
    verdict = check_state_partition(e, ["b"])
    assert not verdict.is_state_partition, (
        "three-state commutative example is a state-partition automaton for gamma={b}: "
        f"disjoint={verdict.disjoint} covers={verdict.covers_all_states}")


@criterion(6, "structural implications")
def test_c6_structural_implications():
    rng = np.random.default_rng(606)
    hits = {"normal": 0, "permuted": 0, "partition": 0}
    for _ in range(300):
        d = canonical(random_permutation_dfa(rng, int(rng.integers(1, 7)), 2))
        for gamma in gammas(d.symbols):
            delta = [s for s in d.symbols if s not in gamma]
            normal = is_normal_subgroup(d, delta)
            assert normal is not Normality.INCONCLUSIVE
            permuted = orbits_are_permuted(d, delta)
            partition = check_state_partition(d, gamma).is_state_partition
            size = minimize(project(d, gamma).dfa).state_count
            assert normal is not Normality.NORMAL or permuted
            assert not permuted or partition
            assert not partition or size <= d.state_count
            hits["normal"] += normal is Normality.NORMAL
            hits["permuted"] += permuted
            hits["partition"] += partition
    assert all(hits.values()), hits

    rng = np.random.default_rng(607)
    for _ in range(300):
        c = canonical(random_commutative_permutation_dfa(rng, int(rng.integers(1, 7)), 3))
        for gamma in gammas(c.symbols):
            assert check_state_partition(c, gamma).is_state_partition
    return ", ".join(f"{k} {v}" for k, v in hits.items())


@criterion(7, "commuting-split construction")
def test_c7_commuting_split():
    rng = np.random.default_rng(707)
    for _ in range(300):
        d, gamma = random_commuting_split_dfa(
            rng, int(rng.integers(1, 4)), int(rng.integers(1, 4)),
            int(rng.integers(1, 3)), int(rng.integers(1, 3)))
        assert split_commutes(d, gamma).valid
        out = project_commuting(d, gamma)
        assert out.state_count == d.state_count
        assert equivalent(out, project(d, gamma).dfa).equal
    return "300 automata"


@criterion(8, "property suites")
def test_c8_property_suites():
    counts = {name: suite() for name, suite in SUITES.items()}
    assert all(c >= CASES for c in counts.values())
    return ", ".join(f"{k} {v}" for k, v in counts.items())


def verdict_lines():
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]
    for t in tests:
        try:
            t()
        except Exception:
            pass
    print("\n".join(verdict_lines()))
    sys.exit(0 if all(" PASS" in line for line in verdict_lines()) else 1)
