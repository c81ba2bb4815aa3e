"""Partial deterministic automata and the measuring instruments used on them.

A :class:`Dfa` stores its transitions letter-major: ``table[a][q]`` is the
target of state ``q`` under the symbol with index ``a``, or :data:`UNDEFINED`.
Each row is therefore the action of one letter on the state set, which is the
shape the permutation-group code wants.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

UNDEFINED = -1


class AutomatonError(ValueError):
    """Raised for malformed automata or inputs that do not fit an automaton."""


class ModeError(AutomatonError):
    """Raised when an operation needs a permutation automaton and gets something else."""


@dataclass(frozen=True)
class Dfa:
    state_count: int
    symbols: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.state_count
        if n < 1:
            raise AutomatonError("an automaton needs at least one state")
        if len(set(self.symbols)) != len(self.symbols):
            raise AutomatonError(f"duplicate symbol names in {self.symbols!r}")
        if any(not s or any(c.isspace() for c in s) for s in self.symbols):
            raise AutomatonError("symbol names must be non-empty and contain no whitespace")
        if len(self.table) != len(self.symbols):
            raise AutomatonError("table needs one row per symbol")
        for sym, row in zip(self.symbols, self.table):
            if len(row) != n:
                raise AutomatonError(f"row for {sym!r} has length {len(row)}, expected {n}")
            for t in row:
                if t != UNDEFINED and not 0 <= t < n:
                    raise AutomatonError(f"transition target {t} out of range for {sym!r}")
        if not 0 <= self.initial < n:
            raise AutomatonError(f"initial state {self.initial} out of range")
        if any(not 0 <= f < n for f in self.finals):
            raise AutomatonError("final state out of range")
        if self.labels is not None and len(self.labels) != n:
            raise AutomatonError("need exactly one label per state")

    @classmethod
    def from_transitions(
        cls,
        state_count: int,
        symbols: Sequence[str],
        transitions: Iterable[tuple[int, str, int]],
        initial: int,
        finals: Iterable[int],
        labels: Sequence[str] | None = None,
    ) -> "Dfa":
        """Build from ``(source, symbol, target)`` triples; repeated pairs are an error."""
        symbols = tuple(symbols)
        pos = {s: i for i, s in enumerate(symbols)}
        rows = [[UNDEFINED] * state_count for _ in symbols]
        for p, s, q in transitions:
            if s not in pos:
                raise AutomatonError(f"unknown symbol {s!r}")
            if not 0 <= p < state_count:
                raise AutomatonError(f"source state {p} out of range")
            if rows[pos[s]][p] != UNDEFINED:
                raise AutomatonError(f"duplicate transition for ({p}, {s!r})")
            rows[pos[s]][p] = q
        return cls(
            state_count,
            symbols,
            tuple(tuple(r) for r in rows),
            initial,
            frozenset(finals),
            tuple(labels) if labels is not None else None,
        )

    @classmethod
    def from_permutations(
        cls,
        perms: dict[str, Sequence[int]],
        initial: int,
        finals: Iterable[int],
        labels: Sequence[str] | None = None,
    ) -> "Dfa":
        """Build a complete automaton from one image array per letter."""
        symbols = tuple(perms)
        rows = tuple(tuple(int(t) for t in perms[s]) for s in symbols)
        n = len(rows[0]) if rows else (len(labels) if labels else 1)
        return cls(n, symbols, rows, initial, frozenset(finals),
                   tuple(labels) if labels is not None else None)

    @property
    def states(self) -> range:
        return range(self.state_count)

    def symbol_index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise AutomatonError(f"unknown symbol {symbol!r}") from None

    def symbol_indices(self, symbols: Iterable[str]) -> list[int]:
        return [self.symbol_index(s) for s in symbols]

    def step(self, q: int, symbol: str) -> int | None:
        t = self.table[self.symbol_index(symbol)][q]
        return None if t == UNDEFINED else t

    def label(self, q: int) -> str:
        return self.labels[q] if self.labels is not None else str(q)

    def index(self, label: str) -> int:
        """State index for a display label (or a decimal index when unlabelled)."""
        if self.labels is None:
            return int(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise AutomatonError(f"unknown state label {label!r}") from None

    def transitions(self) -> Iterable[tuple[int, str, int]]:
        for q in self.states:
            for sym, row in zip(self.symbols, self.table):
                if row[q] != UNDEFINED:
                    yield q, sym, row[q]

    def accepts(self, word: Sequence[str]) -> bool:
        q = run(self, self.initial, word)
        return q is not None and q in self.finals

    def with_symbols(self, symbols: Sequence[str]) -> "Dfa":
        """Same automaton with the alphabet reordered to ``symbols``."""
        if sorted(symbols) != sorted(self.symbols):
            raise AutomatonError("reordering must use the same symbol set")
        rows = tuple(self.table[self.symbol_index(s)] for s in symbols)
        return Dfa(self.state_count, tuple(symbols), rows, self.initial, self.finals, self.labels)


@dataclass(frozen=True)
class EquivalenceVerdict:
    equal: bool
    witness: tuple[str, ...] | None = None

    def __bool__(self):
        return self.equal


def run(d: Dfa, start: int, word: Sequence[str]) -> int | None:
    """Extended transition function; ``None`` once a step is undefined."""
    rows = [d.table[d.symbol_index(s)] for s in word]
    q = start
    for row in rows:
        q = row[q]
        if q == UNDEFINED:
            return None
    return q


def word_action(d: Dfa, word: Sequence[str]) -> tuple[int, ...]:
    """The map ``q -> delta(q, word)`` with :data:`UNDEFINED` for missing steps.

    Letters are applied left to right, so ``word_action(d, u + v)`` equals
    ``compose(word_action(d, u), word_action(d, v))``.
    """
    act = tuple(d.states)
    for s in word:
        act = compose(act, d.table[d.symbol_index(s)])
    return act


def compose(first: Sequence[int], then: Sequence[int]) -> tuple[int, ...]:
    """Apply ``first`` and then ``then``; undefined stays undefined."""
    return tuple(UNDEFINED if q == UNDEFINED else then[q] for q in first)


def is_permutation_dfa(d: Dfa) -> bool:
    n = d.state_count
    return all(UNDEFINED not in row and len(set(row)) == n for row in d.table)


def reachable_states(d: Dfa) -> list[int]:
    """States reachable from the initial state, in breadth-first order."""
    seen = {d.initial}
    order = [d.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for row in d.table:
            t = row[q]
            if t != UNDEFINED and t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def coaccessible_states(d: Dfa) -> set[int]:
    preds: list[list[int]] = [[] for _ in d.states]
    for row in d.table:
        for q, t in enumerate(row):
            if t != UNDEFINED:
                preds[t].append(q)
    seen = set(d.finals)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def is_initially_connected(d: Dfa) -> bool:
    return len(reachable_states(d)) == d.state_count


def empty_dfa(symbols: Sequence[str]) -> Dfa:
    """Canonical automaton for the empty language: one non-final state, no transitions."""
    symbols = tuple(symbols)
    return Dfa(1, symbols, tuple((UNDEFINED,) for _ in symbols), 0, frozenset())


def _restrict(d: Dfa, keep: Sequence[int]) -> Dfa:
    new = {q: i for i, q in enumerate(keep)}
    rows = tuple(
        tuple(new.get(row[q], UNDEFINED) for q in keep) for row in d.table
    )
    labels = tuple(d.labels[q] for q in keep) if d.labels is not None else None
    return Dfa(len(keep), d.symbols, rows, new[d.initial],
               frozenset(new[f] for f in d.finals if f in new), labels)


def trim(d: Dfa) -> Dfa:
    """Keep the states that are reachable and coaccessible.

    States keep their relative order. An empty language yields
    :func:`empty_dfa`.
    """
    useful = coaccessible_states(d)
    if d.initial not in useful:
        return empty_dfa(d.symbols)
    reach = set(reachable_states(d))
    return _restrict(d, [q for q in d.states if q in reach and q in useful])


def canonical(d: Dfa) -> Dfa:
    """Renumber reachable states breadth-first from the initial state.

    Symbols are scanned in declared order, which makes isomorphic
    initially-connected automata identical. Labels are dropped.
    """
    order = reachable_states(d)
    out = _restrict(d, order)
    return Dfa(out.state_count, out.symbols, out.table, out.initial, out.finals)


def minimize(d: Dfa) -> Dfa:
    """Minimal partial DFA of ``L(d)`` with canonical numbering.

    Trims first, then Moore refinement: states are split by finality and
    then by the blocks of their successors until nothing changes. Missing
    transitions play the role of the (dropped) dead state.
    """
    t = trim(d)
    if not t.finals:
        return t
    block = [1 if q in t.finals else 0 for q in t.states]
    count = len(set(block))
    while True:
        sigs = {}
        new_block = []
        for q in t.states:
            sig = (block[q],) + tuple(
                UNDEFINED if row[q] == UNDEFINED else block[row[q]] for row in t.table
            )
            new_block.append(sigs.setdefault(sig, len(sigs)))
        block = new_block
        if len(sigs) == count:
            break
        count = len(sigs)
    rows = [[UNDEFINED] * count for _ in t.symbols]
    for a, row in enumerate(t.table):
        for q, target in enumerate(row):
            if target != UNDEFINED:
                rows[a][block[q]] = block[target]
    merged = Dfa(count, t.symbols, tuple(tuple(r) for r in rows), block[t.initial],
                 frozenset(block[f] for f in t.finals))
    return canonical(merged)


def is_complete(d: Dfa) -> bool:
    return all(UNDEFINED not in row for row in d.table)


def complete(d: Dfa) -> Dfa:
    """Add a fresh non-final sink (last index) when some transition is missing."""
    if is_complete(d):
        return d
    sink = d.state_count
    rows = tuple(
        tuple(sink if t == UNDEFINED else t for t in row) + (sink,) for row in d.table
    )
    labels = d.labels + ("sink",) if d.labels is not None else None
    return Dfa(sink + 1, d.symbols, rows, d.initial, d.finals, labels)


def completed_minimal_size(d: Dfa) -> int:
    """State count of the minimal complete DFA of ``L(d)``."""
    return complete(minimize(d)).state_count


def equivalent(d1: Dfa, d2: Dfa) -> EquivalenceVerdict:
    """Decide ``L(d1) == L(d2)`` by breadth-first search of the product.

    On inequality the witness is a shortest word accepted by exactly one of
    the two automata.
    """
    if set(d1.symbols) != set(d2.symbols):
        raise AutomatonError(
            f"alphabets differ: {sorted(d1.symbols)} vs {sorted(d2.symbols)}"
        )
    c1 = complete(d1)
    c2 = complete(d2.with_symbols(d1.symbols))
    start = (c1.initial, c2.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in c1.finals) != (q in c2.finals):
            word = []
            while parent[pair] is not None:
                pair, a = parent[pair]
                word.append(d1.symbols[a])
            return EquivalenceVerdict(False, tuple(reversed(word)))
        for a in range(len(c1.symbols)):
            nxt = (c1.table[a][p], c2.table[a][q])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return EquivalenceVerdict(True)
