"""Orbits of state sets under a subalphabet."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from permproj.automata import UNDEFINED, Dfa, ModeError, is_permutation_dfa, word_action
from permproj.cycles import to_cycles


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[frozenset[int], ...]
    block_of: tuple[int, ...]
    subalphabet: frozenset[str]

    def __len__(self):
        return len(self.blocks)


def orbit_of(d: Dfa, subalphabet: Iterable[str], states: Iterable[int]) -> frozenset[int]:
    """All states reachable from ``states`` by words over ``subalphabet``."""
    rows = [d.table[a] for a in d.symbol_indices(subalphabet)]
    seen = set(states)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for row in rows:
            t = row[q]
            if t != UNDEFINED and t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def orbit_partition(d: Dfa, subalphabet: Iterable[str]) -> OrbitPartition:
    """Orbits of single states, which partition the state set of a permutation DFA.

    Blocks are ordered by their smallest state. Raises :class:`ModeError` for
    other automata, where orbits may overlap; use :func:`orbit_of` per state there.
    """
    sub = frozenset(subalphabet)
    if not is_permutation_dfa(d):
        raise ModeError("orbit_partition needs a permutation DFA; use orbit_of per state")
    block_of = [-1] * d.state_count
    blocks = []
    for q in d.states:
        if block_of[q] >= 0:
            continue
        orb = orbit_of(d, sub, [q])
        for p in orb:
            block_of[p] = len(blocks)
        blocks.append(orb)
    return OrbitPartition(tuple(blocks), tuple(block_of), sub)


@dataclass(frozen=True)
class PowerWord:
    """The word ``base`` repeated ``exponent`` times, kept unexpanded."""

    base: tuple[str, ...]
    exponent: int

    def expand(self) -> tuple[str, ...]:
        return self.base * self.exponent

    def __len__(self):
        return len(self.base) * self.exponent


def permutation_order(image: Sequence[int]) -> int:
    return math.lcm(1, *(len(c) for c in to_cycles(image)))


def identity_power_word(d: Dfa, subalphabet: Iterable[str], word: Sequence[str]) -> PowerWord:
    """A word ``w`` over the same letters with ``word + w`` acting as the identity.

    ``w`` is ``word`` repeated (order - 1) times, where the order of the
    induced permutation comes from the lcm of its cycle lengths.
    """
    if not is_permutation_dfa(d):
        raise ModeError("identity_power_word needs a permutation DFA")
    sub = set(subalphabet)
    word = tuple(word)
    if not set(word) <= sub:
        raise ValueError(f"word {word!r} is not over {sorted(sub)}")
    order = permutation_order(word_action(d, word))
    if order == 1:
        return PowerWord((), 0)
    return PowerWord(word, order - 1)
