"""Lower-bound witnesses and small named automata used throughout the tests."""

from __future__ import annotations

from dataclasses import dataclass

from permproj.automata import Dfa
from permproj.cycles import perm_from_cycles

WITNESS_GAMMA = ("b", "c", "d", "e", "f", "g")


@dataclass(frozen=True)
class WitnessParams:
    n: int
    m: int

    def __post_init__(self):
        if not (self.n > 0 and self.m > 0 and 0 < 2 * self.m + 1 < self.n):
            raise ValueError(f"need n, m > 0 with 2m + 1 < n, got n={self.n}, m={self.m}")


def make_witness(n: int, m: int) -> Dfa:
    """Permutation DFA on states 1..n whose projection onto b..g needs 2^(n-m) - 1 states.

    ``a`` swaps the pairs {1,2}, ..., {2m-1,2m} and is the only erased letter.
    ``b`` and ``c`` generate every permutation of {2m+1, ..., n}; ``d`` and
    ``e`` permute the pairs among themselves; ``f`` and ``g`` connect state n
    with the pairs. With a single pair there is nothing for ``d`` and ``e``
    to permute, so both are the identity.
    """
    WitnessParams(n, m)
    pairs_odd = list(range(1, 2 * m, 2))
    pairs_even = list(range(2, 2 * m + 1, 2))

    def perm(*cycles):
        return perm_from_cycles(n, *cycles, base=1)

    letters = {
        "a": perm(*[(i, i + 1) for i in pairs_odd]),
        "b": perm((2 * m + 1, 2 * m + 2)),
        "c": perm(tuple(range(2 * m + 1, n + 1))),
        "d": perm((1, 3), (2, 4)) if m >= 2 else perm(),
        "e": perm(tuple(pairs_odd), tuple(pairs_even)) if m >= 2 else perm(),
        "f": perm((1, n)),
        "g": perm((1, n), (2, n - 1)),
    }
    labels = [str(i) for i in range(1, n + 1)]
    return Dfa.from_permutations(letters, initial=n - 1, finals=[n - 1], labels=labels)


def example_commutative() -> Dfa:
    """Three states tracking whether an ``a`` and then a ``b`` have been read.

    Accepts words with no ``a`` or with at least one ``b``.
    """
    # states q_eps, q_a, q_b
    return Dfa.from_transitions(
        3,
        ("a", "b"),
        [(0, "a", 1), (0, "b", 2), (1, "a", 1), (1, "b", 2), (2, "a", 2), (2, "b", 2)],
        initial=0,
        finals=[0, 2],
        labels=("q_eps", "q_a", "q_b"),
    )


def example_group() -> Dfa:
    """a = (0,1), b = (0,1,2), start 0, accept 2."""
    return Dfa.from_permutations(
        {"a": perm_from_cycles(3, (0, 1)), "b": perm_from_cycles(3, (0, 1, 2))},
        initial=0,
        finals=[2],
    )


def remark_state_partition() -> Dfa:
    """Eight states; state-partition for erasing ``a`` although its orbits are not permuted."""
    return Dfa.from_permutations(
        {
            "a": perm_from_cycles(8, (1, 2, 3, 4), (5, 6), (7, 8), base=1),
            "b": perm_from_cycles(8, (1, 5), (2, 6), (3, 7), (4, 8), base=1),
        },
        initial=0,
        finals=[0],
        labels=tuple(str(i) for i in range(1, 9)),
    )


BUILTINS = {
    "example_commutative": (example_commutative, ("a",)),
    "example_group": (example_group, ("b",)),
    "remark_state_partition": (remark_state_partition, ("b",)),
}


def builtin(name: str) -> tuple[Dfa, tuple[str, ...]]:
    """A named fixture and the observable alphabet it is usually projected onto."""
    try:
        make, gamma = BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}") from None
    return make(), gamma
