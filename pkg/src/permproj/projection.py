"""Projection automata: erase the unobservable letters of a DFA's language.

``project`` builds the subset automaton whose states are orbits under the
erased letters; ``project_oracle`` is a separate textbook epsilon-NFA
determinization used to cross-check it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from permproj.automata import (
    UNDEFINED,
    AutomatonError,
    Dfa,
    is_initially_connected,
)


@dataclass(frozen=True)
class ProjectionSpec:
    gamma: tuple[str, ...]
    delta_letters: tuple[str, ...]
    incident_states: frozenset[int]
    quiet_states: frozenset[int]

    @property
    def m(self) -> int:
        return len(self.incident_states)


@dataclass(frozen=True)
class SubsetDfa:
    """A projection automaton together with the source-state subset of each state."""

    dfa: Dfa
    subsets: tuple[frozenset[int], ...]

    @property
    def state_count(self) -> int:
        return self.dfa.state_count

    def subset_labels(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(s)) for s in self.subsets]


@dataclass(frozen=True)
class StatePartitionVerdict:
    disjoint: bool
    covers_all_states: bool
    offending_pair: tuple[frozenset[int], frozenset[int]] | None = None

    @property
    def is_state_partition(self) -> bool:
        return self.disjoint and self.covers_all_states

    def __bool__(self):
        return self.is_state_partition


def split_alphabet(d: Dfa, gamma: Iterable[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """``(gamma, delta)`` in the automaton's symbol order."""
    gamma = set(gamma)
    unknown = gamma - set(d.symbols)
    if unknown:
        raise AutomatonError(f"unknown symbols in gamma: {sorted(unknown)}")
    return (tuple(s for s in d.symbols if s in gamma),
            tuple(s for s in d.symbols if s not in gamma))


def _bits(mask: int) -> frozenset[int]:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return frozenset(out)


def _orbit_masks(d: Dfa, delta: tuple[str, ...]) -> list[int]:
    # closure[q] = bitmask of the delta-orbit of q; orbits of sets are unions of these
    rows = [d.table[d.symbol_index(s)] for s in delta]
    masks = []
    for q in d.states:
        seen = 1 << q
        stack = [q]
        while stack:
            p = stack.pop()
            for row in rows:
                t = row[p]
                if t != UNDEFINED and not seen >> t & 1:
                    seen |= 1 << t
                    stack.append(t)
        masks.append(seen)
    return masks


def project(d: Dfa, gamma: Iterable[str]) -> SubsetDfa:
    """Projection automaton over ``gamma``, reachable part only.

    Start from the orbit of the initial state; a letter maps a subset to the
    orbit of its image. A subset is final when it meets the source finals.
    An empty subset, which only partial automata can reach, becomes a
    non-final sink.
    """
    gamma, delta = split_alphabet(d, gamma)
    orbit = _orbit_masks(d, delta)
    rows = [d.table[d.symbol_index(s)] for s in gamma]
    final_mask = sum(1 << f for f in d.finals)

    start = orbit[d.initial]
    index = {start: 0}
    order = [start]
    trans: list[list[int]] = []
    queue = deque([start])
    while queue:
        mask = queue.popleft()
        out = []
        for row in rows:
            img = 0
            rest, q = mask, 0
            while rest:
                if rest & 1 and row[q] != UNDEFINED:
                    img |= orbit[row[q]]
                rest >>= 1
                q += 1
            if img not in index:
                index[img] = len(order)
                order.append(img)
                queue.append(img)
            out.append(index[img])
        trans.append(out)

    table = tuple(tuple(trans[i][a] for i in range(len(order))) for a in range(len(gamma)))
    finals = frozenset(i for i, mask in enumerate(order) if mask & final_mask)
    subsets = tuple(_bits(mask) for mask in order)
    labels = tuple("{" + ",".join(d.label(q) for q in sorted(s)) + "}" for s in subsets)
    return SubsetDfa(Dfa(len(order), gamma, table, 0, finals, labels), subsets)


def project_oracle(d: Dfa, gamma: Iterable[str]) -> Dfa:
    """Projection by relabelling erased letters as epsilon and determinizing.

    Written independently of :func:`project` as a cross-check.
    """
    gamma, _ = split_alphabet(d, gamma)
    keep = set(gamma)
    # epsilon-NFA: per state, epsilon targets and labelled moves
    eps: dict[int, set[int]] = {q: set() for q in d.states}
    moves: dict[tuple[int, str], set[int]] = {}
    for p, sym, q in d.transitions():
        if sym in keep:
            moves.setdefault((p, sym), set()).add(q)
        else:
            eps[p].add(q)

    def closure(states):
        result = set(states)
        todo = list(states)
        while todo:
            s = todo.pop()
            for t in eps[s]:
                if t not in result:
                    result.add(t)
                    todo.append(t)
        return frozenset(result)

    start = closure({d.initial})
    dstates = [start]
    seen = {start: 0}
    edges = []
    i = 0
    while i < len(dstates):
        cur = dstates[i]
        for sym in gamma:
            nxt = set()
            for s in cur:
                nxt |= moves.get((s, sym), set())
            if not nxt:
                continue
            target = closure(nxt)
            if target not in seen:
                seen[target] = len(dstates)
                dstates.append(target)
            edges.append((i, sym, seen[target]))
        i += 1
    finals = [j for j, S in enumerate(dstates) if S & d.finals]
    return Dfa.from_transitions(len(dstates), gamma, edges, 0, finals)


def unobservability_stats(d: Dfa, gamma: Iterable[str]) -> ProjectionSpec:
    """States touching a non-loop transition on an erased letter, and the rest.

    Direction and multiplicity of those transitions are ignored.
    """
    gamma, delta = split_alphabet(d, gamma)
    incident = set()
    for s in delta:
        for p, q in enumerate(d.table[d.symbol_index(s)]):
            if q != UNDEFINED and q != p:
                incident.add(p)
                incident.add(q)
    return ProjectionSpec(gamma, delta, frozenset(incident),
                          frozenset(set(d.states) - incident))


def check_state_partition(d: Dfa, gamma: Iterable[str]) -> StatePartitionVerdict:
    """Whether the reachable subsets of the projection partition the states.

    ``d`` must be initially connected. Disjointness and coverage are
    reported separately; the first intersecting pair found is returned.
    """
    if not is_initially_connected(d):
        raise AutomatonError("check_state_partition needs an initially connected DFA; trim first")
    subsets = [s for s in project(d, gamma).subsets if s]
    offending = None
    for i, a in enumerate(subsets):
        for b in subsets[i + 1:]:
            if a & b:
                offending = (a, b)
                break
        if offending:
            break
    covered = frozenset().union(*subsets) if subsets else frozenset()
    return StatePartitionVerdict(offending is None, covered == frozenset(d.states), offending)
