"""Bound formulas and seeded scans that check them on concrete automata."""

from __future__ import annotations

import csv
import io as _stdio
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from permproj.automata import UNDEFINED, Dfa, equivalent, is_permutation_dfa, minimize, trim
from permproj.io import serialize
from permproj.projection import project, project_oracle, unobservability_stats
from permproj.witness import WITNESS_GAMMA, make_witness

CSV_HEADER = ("id", "n", "m", "is_perm", "gamma", "proj_min", "perm_bound",
              "general_bound", "witness_expected", "verdict", "seed")

EXHAUSTIVE_MAX_STATES = 4
EXHAUSTIVE_MAX_LETTERS = 2


def perm_bound(n: int, m: int) -> int:
    """Largest projected state complexity for an ``n``-state permutation DFA with incidence ``m``."""
    if n < 1 or not 0 <= m <= n:
        raise ValueError(f"need n >= 1 and 0 <= m <= n, got n={n}, m={m}")
    if m == 1:
        raise ValueError("m = 1 is impossible: a non-loop transition touches two states")
    if m == 0:
        return n
    return 2 ** (n - math.ceil(m / 2)) - 1


def general_bound(n: int, m: int) -> int:
    """Projection bound for arbitrary ``n``-state DFAs, ``m >= 1``."""
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    return 2 ** (n - 1) + 2 ** (n - m) - 1


def witness_size(n: int, m: int) -> int:
    return 2 ** (n - m) - 1


@dataclass(frozen=True)
class BoundReport:
    id: int
    n: int
    m: int
    is_permutation: bool
    gamma: tuple[str, ...]
    proj_min: int
    perm_bound: int | None = None
    general_bound: int | None = None
    witness_expected: int | None = None
    seed: int | None = None

    @property
    def verdicts(self) -> dict[str, bool]:
        out = {}
        if self.perm_bound is not None:
            out["perm_bound"] = self.proj_min <= self.perm_bound
        if self.general_bound is not None:
            out["general_bound"] = self.proj_min <= self.general_bound
        if self.witness_expected is not None:
            out["witness"] = self.proj_min == self.witness_expected
        return out

    @property
    def verdict(self) -> str:
        return "pass" if all(self.verdicts.values()) else "fail"

    def csv_row(self) -> list[str]:
        def opt(v):
            return "" if v is None else str(v)
        return [str(self.id), str(self.n), str(self.m),
                "true" if self.is_permutation else "false", "|".join(self.gamma),
                str(self.proj_min), opt(self.perm_bound), opt(self.general_bound),
                opt(self.witness_expected), self.verdict, opt(self.seed)]


class BoundViolation(AssertionError):
    """A scanned instance broke a bound or the oracle cross-check.

    ``instance`` holds the automaton in text form, with its gamma line, for replay.
    """

    def __init__(self, message: str, report: BoundReport | None, instance: str):
        super().__init__(f"{message}\n{instance}")
        self.report = report
        self.instance = instance


def evaluate(d: Dfa, gamma: Sequence[str], *, id: int = 0, seed: int | None = None,
             witness_m: int | None = None, check_oracle: bool = True) -> BoundReport:
    """Project, minimize and attach every bound that applies to ``d``."""
    proj = project(d, gamma)
    if check_oracle:
        verdict = equivalent(proj.dfa, project_oracle(d, gamma))
        if not verdict.equal:
            raise BoundViolation(
                f"instance {id}: orbit projection and oracle differ on {verdict.witness!r}",
                None, serialize(d, gamma))
    stats = unobservability_stats(d, gamma)
    n, m = d.state_count, stats.m
    is_perm = is_permutation_dfa(d)
    pb = None
    if is_perm:
        pb = trim(d).state_count if m == 0 else perm_bound(n, m)
    return BoundReport(
        id=id, n=n, m=m, is_permutation=is_perm, gamma=stats.gamma,
        proj_min=minimize(proj.dfa).state_count,
        perm_bound=pb,
        general_bound=general_bound(n, m) if m >= 1 else None,
        witness_expected=witness_size(n, witness_m) if witness_m is not None else None,
        seed=seed,
    )


def _checked(report: BoundReport, d: Dfa) -> BoundReport:
    if report.verdict != "pass":
        failed = [k for k, ok in report.verdicts.items() if not ok]
        raise BoundViolation(f"instance {report.id} violates {', '.join(failed)}",
                             report, serialize(d, report.gamma))
    return report


def letter_names(k: int) -> tuple[str, ...]:
    return tuple("abcdefghijklmnopqrstuvwxyz"[:k])


def gammas(symbols: Sequence[str], policy: str | Sequence[str] = "drop-one-letter") -> list[tuple[str, ...]]:
    """Observable alphabets to try: every drop-one-letter choice, every proper
    non-empty subset, or one explicit set."""
    symbols = tuple(symbols)
    if policy == "drop-one-letter":
        return [tuple(s for s in symbols if s != x) for x in symbols]
    if policy == "all-nonempty-proper":
        return [c for k in range(1, len(symbols))
                for c in itertools.combinations(symbols, k)]
    if isinstance(policy, str):
        raise ValueError(f"unknown gamma policy {policy!r}")
    return [tuple(s for s in symbols if s in set(policy))]


# -- random automata ---------------------------------------------------------

def random_permutation_dfa(rng: np.random.Generator, n: int, letters: int) -> Dfa:
    """Each letter an independent uniform permutation; uniform start; each state final w.p. 1/2."""
    perms = {s: rng.permutation(n) for s in letter_names(letters)}
    finals = np.flatnonzero(rng.random(n) < 0.5)
    return Dfa.from_permutations(perms, int(rng.integers(n)), finals.tolist())


def random_dfa(rng: np.random.Generator, n: int, letters: int, undefined_prob: float = 0.2) -> Dfa:
    """Uniform independent targets, each transition missing with ``undefined_prob``."""
    targets = rng.integers(n, size=(letters, n))
    missing = rng.random((letters, n)) < undefined_prob
    table = np.where(missing, UNDEFINED, targets)
    finals = np.flatnonzero(rng.random(n) < 0.5)
    return Dfa(n, letter_names(letters), tuple(tuple(int(t) for t in row) for row in table),
               int(rng.integers(n)), frozenset(finals.tolist()))


def _random_composition(rng: np.random.Generator, n: int) -> list[int]:
    parts = []
    left = n
    while left:
        k = int(rng.integers(1, left + 1))
        parts.append(k)
        left -= k
    return parts


def random_commutative_permutation_dfa(rng: np.random.Generator, n: int, letters: int) -> Dfa:
    """Letters act as translations of abelian groups on blocks of states.

    States are cut into blocks; a block of size ``k`` carries ``Z_r x Z_s``
    with ``r * s = k`` (``r`` drawn among the divisors), and every letter
    adds a random group element. Translations commute, and a random
    relabelling hides the block structure.
    """
    images = [list(range(n)) for _ in range(letters)]
    start = 0
    for k in _random_composition(rng, n):
        divisors = [r for r in range(1, k + 1) if k % r == 0]
        r = int(rng.choice(divisors))
        s = k // r
        for img in images:
            dr, ds = int(rng.integers(r)), int(rng.integers(s))
            for i in range(r):
                for j in range(s):
                    img[start + i * s + j] = start + ((i + dr) % r) * s + (j + ds) % s
        start += k
    sigma = rng.permutation(n)
    inv = np.argsort(sigma)
    perms = {}
    for name, img in zip(letter_names(letters), images):
        perms[name] = [int(sigma[img[int(inv[q])]]) for q in range(n)]
    finals = np.flatnonzero(rng.random(n) < 0.5)
    return Dfa.from_permutations(perms, int(rng.integers(n)), finals.tolist())


def random_commuting_split_dfa(rng: np.random.Generator, n_kept: int, n_erased: int,
                               kept: int, erased: int,
                               undefined_prob: float = 0.2) -> tuple[Dfa, tuple[str, ...]]:
    """Product automaton where kept letters move one coordinate and erased letters the other.

    Returns the automaton and its kept alphabet. Finals are arbitrary and the
    states are randomly relabelled.
    """
    names = letter_names(kept + erased)
    left = random_dfa(rng, n_kept, kept, undefined_prob)
    right = random_dfa(rng, n_erased, erased, undefined_prob)
    n = n_kept * n_erased
    sigma = rng.permutation(n)

    def cell(p, q):
        return int(sigma[p * n_erased + q])

    rows = [[UNDEFINED] * n for _ in names]
    for p in range(n_kept):
        for q in range(n_erased):
            for a in range(kept):
                t = left.table[a][p]
                if t != UNDEFINED:
                    rows[a][cell(p, q)] = cell(t, q)
            for a in range(erased):
                t = right.table[a][q]
                if t != UNDEFINED:
                    rows[kept + a][cell(p, q)] = cell(p, t)
    finals = np.flatnonzero(rng.random(n) < 0.5)
    d = Dfa(n, names, tuple(tuple(r) for r in rows), int(rng.integers(n)),
            frozenset(finals.tolist()))
    return d, names[:kept]


# -- scans -------------------------------------------------------------------

def all_permutation_dfas(n: int, letters: int) -> Iterable[Dfa]:
    """Every permutation DFA on ``n`` states: all letter actions, starts and final sets."""
    perms = list(itertools.permutations(range(n)))
    names = letter_names(letters)
    for actions in itertools.product(perms, repeat=letters):
        for initial in range(n):
            for bits in range(2 ** n):
                finals = [q for q in range(n) if bits >> q & 1]
                yield Dfa(n, names, actions, initial, frozenset(finals))


def _random_instance(seed: int, index: int, kind: str, n_min: int, n_max: int,
                     letters: int, undefined_prob: float,
                     policy) -> tuple[Dfa, list[tuple[str, ...]]]:
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))
    names = letter_names(letters)
    options = gammas(names, policy)
    for _ in range(10_000):
        n = int(rng.integers(n_min, n_max + 1))
        if kind == "permutation":
            return random_permutation_dfa(rng, n, letters), options
        if kind == "commutative":
            return random_commutative_permutation_dfa(rng, n, letters), options
        if kind == "general":
            d = trim(random_dfa(rng, n, letters, undefined_prob))
            if all(unobservability_stats(d, g).m >= 1 for g in options):
                return d, options
            continue
        raise ValueError(f"unknown automaton kind {kind!r}")
    raise RuntimeError("could not draw a trim DFA with unobservable non-loop transitions")


def _random_reports(args) -> list[BoundReport]:
    seed, index, kind, n_min, n_max, letters, undefined_prob, policy, oracle = args
    d, options = _random_instance(seed, index, kind, n_min, n_max, letters, undefined_prob, policy)
    k = len(options)
    return [_checked(evaluate(d, g, id=index * k + j, seed=seed, check_oracle=oracle), d)
            for j, g in enumerate(options)]


def scan(mode: str = "random", *, kind: str = "permutation", n_min: int = 1, n_max: int = 4,
         letters: int = 2, samples: int = 100, seed: int | None = None,
         gamma_policy: str | Sequence[str] = "drop-one-letter", undefined_prob: float = 0.2,
         check_oracle: bool = True, workers: int = 1) -> list[BoundReport]:
    """Check the projection bounds on many automata.

    ``exhaustive`` enumerates every permutation DFA with ``n_min..n_max``
    states (capped at 4 states and 2 letters). ``random`` draws ``samples``
    automata of the given ``kind`` (permutation, commutative or general;
    general ones are trimmed and redrawn until every observable alphabet has
    an unobservable non-loop transition). Output is sorted by id and does not
    depend on ``workers``. The first violation raises :class:`BoundViolation`.
    """
    if mode == "exhaustive":
        if kind != "permutation":
            raise ValueError("exhaustive mode enumerates permutation automata only")
        if n_max > EXHAUSTIVE_MAX_STATES or letters > EXHAUSTIVE_MAX_LETTERS:
            raise ValueError(
                f"exhaustive mode is capped at {EXHAUSTIVE_MAX_STATES} states and "
                f"{EXHAUSTIVE_MAX_LETTERS} letters; use random mode")
        options = gammas(letter_names(letters), gamma_policy)
        reports = []
        for n in range(n_min, n_max + 1):
            for d in all_permutation_dfas(n, letters):
                for g in options:
                    reports.append(_checked(
                        evaluate(d, g, id=len(reports), check_oracle=check_oracle), d))
        return reports
    if mode != "random":
        raise ValueError(f"unknown scan mode {mode!r}")
    if seed is None:
        raise ValueError("random mode needs a seed")
    jobs = [(seed, i, kind, n_min, n_max, letters, undefined_prob, gamma_policy, check_oracle)
            for i in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            batches = list(pool.map(_random_reports, jobs, chunksize=16))
    else:
        batches = [_random_reports(j) for j in jobs]
    return sorted((r for b in batches for r in b), key=lambda r: r.id)


def witness_sweep(pairs: Iterable[tuple[int, int]], check_oracle: bool = True) -> list[BoundReport]:
    """Project each witness automaton and require exactly 2^(n-m) - 1 states."""
    reports = []
    for i, (n, m) in enumerate(pairs):
        d = make_witness(n, m)
        reports.append(_checked(
            evaluate(d, WITNESS_GAMMA, id=i, witness_m=m, check_oracle=check_oracle), d))
    return reports


def write_csv(reports: Iterable[BoundReport], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow(r.csv_row())


def reports_csv(reports: Iterable[BoundReport]) -> str:
    buf = _stdio.StringIO()
    write_csv(reports, buf)
    return buf.getvalue()
