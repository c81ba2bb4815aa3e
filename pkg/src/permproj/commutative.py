"""Projection when the erased letters commute with the kept ones.

If every erased letter commutes with every kept letter, erased letters can be
pushed to the end of a word. The projection then needs no subset
construction: drop the erased transitions and accept wherever an erased word
leads into a final state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from permproj.algebra import is_commutative_dfa
from permproj.automata import UNDEFINED, AutomatonError, Dfa, compose, minimize
from permproj.projection import split_alphabet


class PreconditionError(AutomatonError):
    pass


@dataclass(frozen=True)
class CentralizerSplit:
    gamma: tuple[str, ...]
    offending_triple: tuple[str, str, int] | None = None

    @property
    def valid(self) -> bool:
        return self.offending_triple is None

    def __bool__(self):
        return self.valid


def split_commutes(d: Dfa, gamma: Iterable[str]) -> CentralizerSplit:
    """Check erased/kept letter pairs; report ``(erased, kept, state)`` on failure."""
    gamma, delta = split_alphabet(d, gamma)
    for a in delta:
        ra = d.table[d.symbol_index(a)]
        for b in gamma:
            rb = d.table[d.symbol_index(b)]
            ab, ba = compose(ra, rb), compose(rb, ra)
            for q in d.states:
                if ab[q] != ba[q]:
                    return CentralizerSplit(gamma, (a, b, q))
    return CentralizerSplit(gamma)


def _backward_closure(d: Dfa, letters: tuple[str, ...], targets: Iterable[int]) -> frozenset[int]:
    preds: list[list[int]] = [[] for _ in d.states]
    for s in letters:
        for p, q in enumerate(d.table[d.symbol_index(s)]):
            if q != UNDEFINED:
                preds[q].append(p)
    seen = set(targets)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return frozenset(seen)


def project_commuting(d: Dfa, gamma: Iterable[str]) -> Dfa:
    """Same states, kept letters only, finals widened by erased-letter reachability.

    All states are kept, even ones no longer reachable; minimize separately.
    """
    split = split_commutes(d, gamma)
    if not split.valid:
        a, b, q = split.offending_triple
        raise PreconditionError(
            f"letters {a!r} (erased) and {b!r} (kept) do not commute at state {d.label(q)}"
        )
    gamma, delta = split_alphabet(d, gamma)
    finals = _backward_closure(d, delta, d.finals)
    rows = tuple(d.table[d.symbol_index(s)] for s in gamma)
    return Dfa(d.state_count, gamma, rows, d.initial, finals, d.labels)


def project_commutative_language(d: Dfa, gamma: Iterable[str]) -> Dfa:
    """Projection of a commutative language via its minimal automaton.

    The language is commutative exactly when its minimal DFA has pairwise
    commuting letters; then every split commutes and
    :func:`project_commuting` applies.
    """
    mini = minimize(d)
    if not is_commutative_dfa(mini):
        raise PreconditionError("language not commutative")
    return project_commuting(mini, gamma)
