"""Text, DOT and JSON forms of automata.

Text format, one directive per line, ``#`` starting a comment::

    states: 3                  # or a list of labels: [q0] [q1] [q2]
    alphabet: a b
    initial: 0
    final: 2
    perm: a (0,1)              # cycle notation, unmentioned states fixed
    trans: 0 b 1               # <state> <symbol> <state>
    gamma: b                   # optional default observable alphabet

States are referenced by 0-based index or by ``[label]``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from permproj.automata import UNDEFINED, Dfa
from permproj.cycles import CycleError, format_cycles, parse_cycles
from permproj.projection import SubsetDfa

_LABEL = re.compile(r"^\[([^\[\]\s#(),]+)\]$")
_DIRECTIVES = ("states", "alphabet", "initial", "final", "trans", "perm", "gamma")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class AutomatonFile:
    dfa: Dfa
    gamma: tuple[str, ...] | None = None


def parse(text: str) -> AutomatonFile:
    header: dict[str, tuple[int, list[str]]] = {}
    trans: list[tuple[int, list[str]]] = []
    perms: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in _DIRECTIVES:
            raise ParseError(f"unknown directive {line.split()[0]!r}", lineno)
        tokens = rest.split()
        if key == "trans":
            trans.append((lineno, tokens))
        elif key == "perm":
            perms.append((lineno, tokens))
        elif key in header:
            raise ParseError(f"duplicate {key!r} directive", lineno)
        else:
            header[key] = (lineno, tokens)

    for key in ("states", "alphabet", "initial"):
        if key not in header:
            raise ParseError(f"missing {key!r} directive")

    lineno, tokens = header["states"]
    labels: list[str] | None = None
    if len(tokens) == 1 and tokens[0].isdigit():
        n = int(tokens[0])
    else:
        labels = []
        for tok in tokens:
            m = _LABEL.match(tok)
            if not m:
                raise ParseError(f"expected a state count or [label] list, got {tok!r}", lineno)
            if m.group(1) in labels:
                raise ParseError(f"duplicate state label {tok!r}", lineno)
            labels.append(m.group(1))
        n = len(labels)
    if n < 1:
        raise ParseError("need at least one state", lineno)

    def state(tok: str, where: int) -> int:
        m = _LABEL.match(tok)
        if m:
            if labels is None or m.group(1) not in labels:
                raise ParseError(f"unknown state label {tok!r}", where)
            return labels.index(m.group(1))
        if not tok.isdigit() or int(tok) >= n:
            raise ParseError(f"bad state {tok!r}", where)
        return int(tok)

    lineno, symbols = header["alphabet"]
    if len(set(symbols)) != len(symbols):
        raise ParseError("duplicate symbol in alphabet", lineno)
    pos = {s: i for i, s in enumerate(symbols)}
    rows = [[UNDEFINED] * n for _ in symbols]

    lineno, tokens = header["initial"]
    if len(tokens) != 1:
        raise ParseError("initial needs exactly one state", lineno)
    initial = state(tokens[0], lineno)

    finals: set[int] = set()
    if "final" in header:
        lineno, tokens = header["final"]
        finals = {state(t, lineno) for t in tokens}

    by_trans: set[str] = set()
    for lineno, tokens in trans:
        if len(tokens) != 3:
            raise ParseError("trans needs <state> <symbol> <state>", lineno)
        p, sym, q = tokens
        if sym not in pos:
            raise ParseError(f"unknown symbol {sym!r}", lineno)
        p, q = state(p, lineno), state(q, lineno)
        row = rows[pos[sym]]
        if row[p] != UNDEFINED:
            raise ParseError(f"duplicate transition for ({tokens[0]}, {sym})", lineno)
        row[p] = q
        by_trans.add(sym)

    by_perm: set[str] = set()
    for lineno, tokens in perms:
        if not tokens:
            raise ParseError("perm needs a symbol", lineno)
        sym = tokens[0]
        if sym not in pos:
            raise ParseError(f"unknown symbol {sym!r}", lineno)
        if sym in by_trans:
            raise ParseError(f"symbol {sym!r} defined by both trans and perm", lineno)
        if sym in by_perm:
            raise ParseError(f"duplicate perm line for {sym!r}", lineno)
        try:
            image = parse_cycles(" ".join(tokens[1:]), n, lambda t: state(t, lineno))
        except CycleError as exc:
            raise ParseError(str(exc), lineno) from None
        rows[pos[sym]] = list(image)
        by_perm.add(sym)

    gamma = None
    if "gamma" in header:
        lineno, gamma = header["gamma"]
        unknown = [s for s in gamma if s not in pos]
        if unknown:
            raise ParseError(f"unknown symbols in gamma: {unknown}", lineno)
        gamma = tuple(gamma)

    try:
        dfa = Dfa(n, tuple(symbols), tuple(tuple(r) for r in rows), initial,
                  frozenset(finals), tuple(labels) if labels is not None else None)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return AutomatonFile(dfa, gamma)


def _ref(d: Dfa):
    if d.labels is None:
        return str
    bad = [lab for lab in d.labels if not _LABEL.match(f"[{lab}]")]
    if bad:
        raise ValueError(f"labels {bad!r} cannot be written in the text format")
    return lambda q: f"[{d.labels[q]}]"


def serialize(d: Dfa, gamma: Sequence[str] | None = None) -> str:
    """Canonical text form.

    Bijective letters are written as ``perm`` lines, all others as ``trans``
    lines sorted by source state and then symbol order.
    """
    ref = _ref(d)
    if d.labels is None:
        lines = [f"states: {d.state_count}"]
    else:
        lines = ["states: " + " ".join(f"[{lab}]" for lab in d.labels)]
    lines.append("alphabet: " + " ".join(d.symbols))
    lines.append(f"initial: {ref(d.initial)}")
    lines.append("final:" + "".join(f" {ref(f)}" for f in sorted(d.finals)))
    n = d.state_count
    is_perm = [UNDEFINED not in row and len(set(row)) == n for row in d.table]
    for sym, row, perm in zip(d.symbols, d.table, is_perm):
        if perm:
            lines.append(f"perm: {sym} {format_cycles(row, ref)}")
    for q in d.states:
        for sym, row, perm in zip(d.symbols, d.table, is_perm):
            if not perm and row[q] != UNDEFINED:
                lines.append(f"trans: {ref(q)} {sym} {ref(row[q])}")
    if gamma is not None:
        ordered = [s for s in d.symbols if s in set(gamma)]
        lines.append("gamma:" + "".join(f" {s}" for s in ordered))
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(a: Dfa | SubsetDfa, name: str = "automaton") -> str:
    """Graphviz digraph; projection states are labelled with their subsets."""
    d = a.dfa if isinstance(a, SubsetDfa) else a
    labels = [d.label(q) for q in d.states]
    out = [f'digraph "{_dot_escape(name)}" {{', "  rankdir=LR;", '  __start [shape=point];']
    for q in d.states:
        shape = "doublecircle" if q in d.finals else "circle"
        out.append(f'  q{q} [shape={shape}, label="{_dot_escape(labels[q])}"];')
    out.append(f"  __start -> q{d.initial};")
    edges: dict[tuple[int, int], list[str]] = {}
    for p, sym, q in d.transitions():
        edges.setdefault((p, q), []).append(sym)
    for (p, q), syms in edges.items():
        out.append(f'  q{p} -> q{q} [label="{_dot_escape(",".join(syms))}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def to_json(a: Dfa | SubsetDfa, gamma: Sequence[str] | None = None) -> dict:
    """Plain-data form matching ``automaton.schema.json``."""
    d = a.dfa if isinstance(a, SubsetDfa) else a
    doc = {
        "states": d.state_count,
        "alphabet": list(d.symbols),
        "initial": d.initial,
        "finals": sorted(d.finals),
        "transitions": [[p, s, q] for p, s, q in d.transitions()],
    }
    if d.labels is not None and not isinstance(a, SubsetDfa):
        doc["labels"] = list(d.labels)
    if isinstance(a, SubsetDfa):
        doc["subsets"] = [list(s) for s in a.subset_labels()]
    if gamma is not None:
        doc["gamma"] = [s for s in d.symbols if s in set(gamma)]
    return doc


def from_json(doc: dict) -> Dfa:
    return Dfa.from_transitions(
        doc["states"], doc["alphabet"], [tuple(t) for t in doc["transitions"]],
        doc["initial"], doc["finals"], doc.get("labels"),
    )


def json_schema() -> dict:
    text = resources.files("permproj").joinpath("automaton.schema.json").read_text()
    return json.loads(text)
