"""Nestings, crossings, alignments and their neighbor variants in arc diagrams.

For two arcs ``(i1, j1)`` and ``(i2, j2)`` with ``i1 < i2``:

=====================  ==================================
nesting                ``i1 < i2 < j2 < j1``
left nesting           nesting with ``i2 == i1 + 1``
right nesting          nesting with ``j1 == j2 + 1``
crossing               ``i1 < i2 < j1 < j2``
left crossing          crossing with ``i2 == i1 + 1``
right crossing         crossing with ``j2 == j1 + 1``
alignment              ``i1 < j1 < i2 < j2``
neighbor alignment     alignment with ``i2 == j1 + 1``
=====================  ==================================

A k-crossing is a set of k arcs with ``i1 < ... < ik < j1 < ... < jk``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, Union

from .diagram import Arc, Diagram, Role, roles


class PatternKind(Enum):
    NESTING = "nesting"
    LEFT_NESTING = "left-nesting"
    RIGHT_NESTING = "right-nesting"
    CROSSING = "crossing"
    LEFT_CROSSING = "left-crossing"
    RIGHT_CROSSING = "right-crossing"
    ALIGNMENT = "alignment"
    NEIGHBOR_ALIGNMENT = "neighbor-alignment"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class KCrossing:
    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"a k-crossing needs k >= 2, got {self.k}")

    @property
    def value(self) -> str:
        return f"k-crossing:{self.k}"

    def __str__(self) -> str:
        return self.value


Pattern = Union[PatternKind, KCrossing]

NEIGHBOR_PATTERNS = (
    PatternKind.LEFT_CROSSING,
    PatternKind.LEFT_NESTING,
    PatternKind.RIGHT_CROSSING,
    PatternKind.RIGHT_NESTING,
    PatternKind.NEIGHBOR_ALIGNMENT,
)


@dataclass(frozen=True)
class PatternOccurrence:
    kind: Pattern
    arcs: tuple[Arc, ...]


def parse_pattern(name: str) -> Pattern:
    """Parse a CLI pattern name such as ``left-nesting`` or ``k-crossing:3``."""
    name = name.strip().lower()
    if name.startswith("k-crossing"):
        _, sep, k = name.partition(":")
        if not sep or not k.isdigit():
            raise ValueError(f"expected k-crossing:<k>, got {name!r}")
        return KCrossing(int(k))
    try:
        return PatternKind(name)
    except ValueError:
        raise ValueError(f"unknown pattern {name!r}") from None


def _pairwise(arcs: tuple[Arc, ...], test) -> Iterator[tuple[Arc, Arc]]:
    for a, b in combinations(arcs, 2):
        if test(a[0], a[1], b[0], b[1]):
            yield a, b


def _iter_pairs(d: Diagram, kind: PatternKind) -> Iterator[tuple[Arc, Arc]]:
    arcs = d.arcs
    # arcs are sorted by left endpoint, so a in combinations(arcs, 2) always has i1 < i2
    if kind is PatternKind.NESTING:
        yield from _pairwise(arcs, lambda i1, j1, i2, j2: i2 < j2 < j1)
        return
    if kind is PatternKind.CROSSING:
        yield from _pairwise(arcs, lambda i1, j1, i2, j2: i2 < j1 < j2)
        return
    if kind is PatternKind.ALIGNMENT:
        yield from _pairwise(arcs, lambda i1, j1, i2, j2: j1 < i2)
        return

    succ = d.successor()
    pred = d.predecessor()
    for i1, j1 in arcs:
        if kind is PatternKind.LEFT_NESTING:
            j2 = succ.get(i1 + 1)
            if j2 is not None and j2 < j1:
                yield (i1, j1), (i1 + 1, j2)
        elif kind is PatternKind.LEFT_CROSSING:
            j2 = succ.get(i1 + 1)
            if j2 is not None and i1 + 1 < j1 < j2:
                yield (i1, j1), (i1 + 1, j2)
        elif kind is PatternKind.RIGHT_NESTING:
            i2 = pred.get(j1 - 1)
            if i2 is not None and i1 < i2:
                yield (i1, j1), (i2, j1 - 1)
        elif kind is PatternKind.RIGHT_CROSSING:
            i2 = pred.get(j1 + 1)
            if i2 is not None and i1 < i2 < j1:
                yield (i1, j1), (i2, j1 + 1)
        elif kind is PatternKind.NEIGHBOR_ALIGNMENT:
            j2 = succ.get(j1 + 1)
            if j2 is not None:
                yield (i1, j1), (j1 + 1, j2)
        else:  # pragma: no cover
            raise ValueError(f"unhandled pattern {kind}")


def _iter_occurrences(d: Diagram, kind: Pattern) -> Iterator[tuple[Arc, ...]]:
    if isinstance(kind, KCrossing):
        if kind.k > d.k:
            return
        for group in combinations(d.arcs, kind.k):
            ends = [j for _, j in group]
            if group[-1][0] < ends[0] and all(a < b for a, b in zip(ends, ends[1:])):
                yield group
        return
    yield from _iter_pairs(d, kind)


def occurrences(d: Diagram, kind: Pattern) -> list[PatternOccurrence]:
    """All occurrences of ``kind`` in ``d``, ordered lexicographically by their arcs."""
    return [PatternOccurrence(kind, arcs) for arcs in _iter_occurrences(d, kind)]


def count(d: Diagram, kind: Pattern) -> int:
    return sum(1 for _ in _iter_occurrences(d, kind))


def contains(d: Diagram, kind: Pattern) -> bool:
    return next(_iter_occurrences(d, kind), None) is not None


def avoids(d: Diagram, kinds: Iterable[Pattern]) -> bool:
    return not any(contains(d, kind) for kind in kinds)


def count_transients(d: Diagram) -> int:
    return sum(1 for r in roles(d) if r is Role.TRANSIENT)
