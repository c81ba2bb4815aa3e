"""Letter actions as transformations: commutation, generated subgroups, normality."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from permproj.automata import Dfa, ModeError, compose, is_permutation_dfa
from permproj.orbits import orbit_of

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class TransformationSet:
    elements: tuple[tuple[int, ...], ...]
    generators: tuple[str, ...]
    truncated: bool = False

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        return tuple(item) in self._lookup

    @property
    def _lookup(self) -> frozenset:
        # cached on first use; the dataclass is frozen so go through object.__setattr__
        try:
            return self.__dict__["_lookup_cache"]
        except KeyError:
            s = frozenset(self.elements)
            object.__setattr__(self, "_lookup_cache", s)
            return s


class Normality(enum.Enum):
    NORMAL = "normal"
    NOT_NORMAL = "not normal"
    INCONCLUSIVE = "inconclusive: cap exceeded"


def _require_permutation(d: Dfa, what: str):
    if not is_permutation_dfa(d):
        raise ModeError(f"{what} needs a permutation DFA")


def inverse(image: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(image)
    for q, t in enumerate(image):
        inv[t] = q
    return tuple(inv)


def letters_commute(d: Dfa, a: str, b: str) -> bool:
    """``delta(q, ab) == delta(q, ba)`` for every state, undefined matching undefined."""
    ra, rb = d.table[d.symbol_index(a)], d.table[d.symbol_index(b)]
    return compose(ra, rb) == compose(rb, ra)


def is_commutative_dfa(d: Dfa) -> bool:
    return all(letters_commute(d, a, b) for a, b in combinations(d.symbols, 2))


def generate_subgroup(d: Dfa, letters: Iterable[str], cap: int = DEFAULT_CAP) -> TransformationSet:
    """Breadth-first closure of the identity under the given letters' permutations."""
    _require_permutation(d, "generate_subgroup")
    letters = tuple(s for s in d.symbols if s in set(letters))
    gens = [d.table[d.symbol_index(s)] for s in letters]
    ident = tuple(d.states)
    seen = {ident}
    order = [ident]
    queue = deque(order)
    while queue:
        h = queue.popleft()
        for g in gens:
            k = compose(h, g)
            if k not in seen:
                if len(order) >= cap:
                    return TransformationSet(tuple(order), letters, truncated=True)
                seen.add(k)
                order.append(k)
                queue.append(k)
    return TransformationSet(tuple(order), letters)


def is_normal_subgroup(d: Dfa, delta: Iterable[str], cap: int = DEFAULT_CAP) -> Normality:
    """Whether the subgroup generated by ``delta`` is normal in the transition group.

    Conjugation is a homomorphism and the group is finite, so it is enough to
    conjugate the subgroup's generators by each letter of the alphabet.
    """
    _require_permutation(d, "is_normal_subgroup")
    group = generate_subgroup(d, delta, cap)
    if group.truncated:
        return Normality.INCONCLUSIVE
    gens = [d.table[d.symbol_index(s)] for s in group.generators]
    for x in d.table:
        x_inv = inverse(x)
        for h in gens:
            # q -> x(h(x^-1(q)))
            conj = compose(compose(x_inv, h), x)
            if conj not in group:
                return Normality.NOT_NORMAL
    return Normality.NORMAL


def orbits_are_permuted(d: Dfa, delta: Iterable[str]) -> bool:
    """Every letter maps each ``delta``-orbit exactly onto an orbit."""
    _require_permutation(d, "orbits_are_permuted")
    delta = tuple(delta)
    orbits = [orbit_of(d, delta, [q]) for q in d.states]
    for row in d.table:
        for q in d.states:
            if frozenset(row[p] for p in orbits[q]) != orbits[row[q]]:
                return False
    return True
