"""Cycle notation for permutations of ``{0, ..., n-1}`` (or of labelled points)."""

from __future__ import annotations

import re
from typing import Callable, Sequence

_CYCLE = re.compile(r"\(([^()]*)\)")


class CycleError(ValueError):
    pass


def parse_cycles(text: str, n: int, point: Callable[[str], int] = int) -> tuple[int, ...]:
    """Image array of the permutation written as ``(1,2)(3,4,5)``.

    ``point`` turns one element token into a state index. Unmentioned points
    are fixed. A point occurring twice is rejected since the result would
    not be a bijection.

    >>> parse_cycles("(0,1)(2,3)", 5)
    (1, 0, 3, 2, 4)
    """
    body = "".join(text.split())
    if body in ("", "()"):
        return tuple(range(n))
    pos = 0
    image = list(range(n))
    used: set[int] = set()
    for m in _CYCLE.finditer(body):
        if m.start() != pos:
            raise CycleError(f"unexpected text {body[pos:m.start()]!r} in cycle notation")
        pos = m.end()
        tokens = [t for t in m.group(1).split(",")]
        if any(t == "" for t in tokens):
            raise CycleError(f"empty element in cycle ({m.group(1)})")
        pts = []
        for tok in tokens:
            try:
                p = point(tok)
            except (KeyError, ValueError) as exc:
                raise CycleError(f"bad point {tok!r}") from exc
            if not 0 <= p < n:
                raise CycleError(f"point {tok!r} out of range")
            if p in used:
                raise CycleError(f"point {tok!r} appears twice, not a bijection")
            used.add(p)
            pts.append(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            image[a] = b
    if pos != len(body):
        raise CycleError(f"unexpected text {body[pos:]!r} in cycle notation")
    return tuple(image)


def to_cycles(image: Sequence[int]) -> list[tuple[int, ...]]:
    """Non-trivial cycles of a permutation, each starting at its smallest point."""
    seen = set()
    out = []
    for start in range(len(image)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        q = image[start]
        while q != start:
            cyc.append(q)
            seen.add(q)
            q = image[q]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def format_cycles(image: Sequence[int], name: Callable[[int], str] = str) -> str:
    cycles = to_cycles(image)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(name(p) for p in c) + ")" for c in cycles)


def perm_from_cycles(n: int, *cycles: Sequence[int], base: int = 0) -> tuple[int, ...]:
    """Image array from explicit cycles given with ``base``-based points."""
    image = list(range(n))
    for c in cycles:
        pts = [p - base for p in c]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            image[a] = b
    return tuple(image)
