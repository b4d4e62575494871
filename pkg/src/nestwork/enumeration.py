"""Exhaustive generation of partitions and partial matchings, class filters and counts.

Classes (``k`` counts arcs unless noted):

* ``M``: all partial matchings
* ``S``: all set partitions (``k`` counts blocks)
* ``P``: matchings with no neighbor alignment
* ``Q``: ``P`` with no left nesting
* ``R``: ``Q`` with no right nesting
* ``T``: partitions with no right nesting
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Iterator

from . import patterns
from .diagram import Diagram
from .patterns import PatternKind
from .series import stirling2

MAX_MATCHING_N = 16
MAX_PARTITION_N = 12
ENV_LIMIT = "NESTWORK_MAX_BRUTE_N"


class ClassId(Enum):
    M = "M"
    S = "S"
    P = "P"
    Q = "Q"
    R = "R"
    T = "T"

    @property
    def is_matching_class(self) -> bool:
        return self not in (ClassId.S, ClassId.T)

    @property
    def forbidden(self) -> tuple[PatternKind, ...]:
        return _FORBIDDEN[self]


_FORBIDDEN = {
    ClassId.M: (),
    ClassId.S: (),
    ClassId.P: (PatternKind.NEIGHBOR_ALIGNMENT,),
    ClassId.Q: (PatternKind.NEIGHBOR_ALIGNMENT, PatternKind.LEFT_NESTING),
    ClassId.R: (PatternKind.NEIGHBOR_ALIGNMENT, PatternKind.LEFT_NESTING, PatternKind.RIGHT_NESTING),
    ClassId.T: (PatternKind.RIGHT_NESTING,),
}


class EnumerationLimitError(ValueError):
    """Raised when a brute-force count is requested beyond the enumeration guard."""


@dataclass
class CountTable:
    class_id: ClassId
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def row(self, n: int) -> list[int]:
        ks = sorted(k for (m, k) in self.entries if m == n)
        return [self.entries[n, k] for k in ks]


# -- generators ---------------------------------------------------------------


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    word = [0] * n

    def extend(pos: int, top: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(word)
            return
        for v in range(top + 2):
            word[pos] = v
            yield from extend(pos + 1, max(top, v))

    yield from extend(1, 0)


def _rgs_to_diagram(word: tuple[int, ...]) -> Diagram:
    last: dict[int, int] = {}
    arcs = []
    for v, b in enumerate(word, start=1):
        if b in last:
            arcs.append((last[b], v))
        last[b] = v
    return Diagram._trusted(len(word), tuple(sorted(arcs)))


def all_partitions(n: int) -> Iterator[Diagram]:
    """Linear representations of all Bell(n) partitions of [n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for word in restricted_growth_strings(n):
        yield _rgs_to_diagram(word)


def all_partial_matchings(n: int, arcs: int | None = None) -> Iterator[Diagram]:
    """All partial matchings of [n], optionally only those with ``arcs`` arcs.

    Order: vertex ``v`` (smallest unused) is first left as a singleton, then
    matched to each later unused vertex in ascending order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(free: tuple[int, ...], need: int | None) -> Iterator[list[tuple[int, int]]]:
        if need is not None and 2 * need > len(free):
            return
        if not free:
            yield []
            return
        v, rest = free[0], free[1:]
        if need is None or 2 * need <= len(rest):
            yield from rec(rest, need)
        if need == 0:
            return
        for idx, w in enumerate(rest):
            for tail in rec(rest[:idx] + rest[idx + 1:], None if need is None else need - 1):
                yield [(v, w)] + tail

    for chosen in rec(tuple(range(1, n + 1)), arcs):
        yield Diagram._trusted(n, tuple(sorted(chosen)))


def class_members(c: ClassId | str, n: int, k: int | None = None) -> Iterator[Diagram]:
    """Members of class ``c`` on [n]; ``k`` counts arcs (blocks for ``S``)."""
    c = ClassId(c)
    if c.is_matching_class:
        source = all_partial_matchings(n, k)
        want = None
    else:
        source = all_partitions(n)
        want = None if k is None else (n - k if c is ClassId.S else k)
    forbidden = c.forbidden
    for d in source:
        if want is not None and d.k != want:
            continue
        if patterns.avoids(d, forbidden):
            yield d


# -- closed forms ---------------------------------------------------------------


def _domain(cond: bool, name: str, n: int, k: int) -> None:
    if not cond:
        raise ValueError(f"{name}({n}, {k}) is outside its domain")


@lru_cache(maxsize=None)
def _p_rows(n: int) -> tuple[tuple[int, ...], ...]:
    rows: list[tuple[int, ...]] = [(1,), (1,)]
    for m in range(2, n + 1):
        prev, prev2 = rows[m - 1], rows[m - 2]
        row = [1]
        for k in range(1, m // 2 + 1):
            a = prev[k] if k < len(prev) else 0
            row.append(a + (m - k) * prev2[k - 1])
        rows.append(tuple(row))
    return tuple(rows[: n + 1])


def count_p(n: int, k: int) -> int:
    """Matchings of [n] with k arcs and no neighbor alignment."""
    _domain(n >= 1 and 0 <= k <= n // 2, "count_p", n, k)
    return _p_rows(n)[n][k]


def count_q(n: int, k: int) -> int:
    """Matchings of [n] with k arcs avoiding neighbor alignments and left nestings."""
    _domain(n >= 0 and 0 <= k <= n // 2, "count_q", n, k)
    return stirling2(n + 1 - k, n + 1 - 2 * k)


def count_r(n: int, k: int) -> int:
    """Matchings of [n] with k arcs avoiding neighbor alignments, left and right nestings.

    The ``n - 2k`` singletons cut [n] into ``s = n - 2k + 1`` intervals and the
    arcs correspond to compositions of ``k`` into ``s(s+1)/2`` parts.
    """
    _domain(n >= 0 and 0 <= 2 * k <= n + 1, "count_r", n, k)
    if k == 0:
        return 1
    s = n - 2 * k + 1
    if s < 1:
        return 0
    return comb(k + comb(s + 1, 2) - 1, k)


def count_t(n: int, k: int) -> int:
    """Partitions of [n] with k arcs and no right nesting."""
    _domain(n >= 1 and 0 <= k <= n - 1, "count_t", n, k)
    return comb(comb(n - k + 1, 2) + k - 1, k)


def count_m(n: int, k: int) -> int:
    _domain(n >= 0 and 0 <= k <= n // 2, "count_m", n, k)
    double_factorial = 1
    for odd in range(1, 2 * k, 2):
        double_factorial *= odd
    return comb(n, 2 * k) * double_factorial


def count_s(n: int, k: int) -> int:
    _domain(n >= 0 and 0 <= k <= n, "count_s", n, k)
    return stirling2(n, k)


_CLOSED_FORMS = {
    ClassId.M: count_m,
    ClassId.S: count_s,
    ClassId.P: count_p,
    ClassId.Q: count_q,
    ClassId.R: count_r,
    ClassId.T: count_t,
}


def k_range(c: ClassId | str, n: int) -> range:
    """The valid ``k`` values of the closed-form counter for class ``c`` on [n]."""
    c = ClassId(c)
    if c is ClassId.S:
        return range(0 if n == 0 else 1, n + 1)
    if c is ClassId.T:
        return range(0, max(n, 0))
    if c is ClassId.R:
        return range(0, (n + 1) // 2 + 1)
    if c is ClassId.P and n == 0:
        return range(0)
    return range(0, n // 2 + 1)


def count(c: ClassId | str, n: int, k: int | None = None) -> int:
    """Closed-form count of class ``c``; sums over all valid ``k`` when ``k`` is None."""
    c = ClassId(c)
    fn = _CLOSED_FORMS[c]
    if k is not None:
        return fn(n, k)
    ks = k_range(c, n)
    if not ks:
        raise ValueError(f"class {c.value} has no closed form for n={n}")
    return sum(fn(n, j) for j in ks)


def count_table(c: ClassId | str, n_max: int) -> CountTable:
    c = ClassId(c)
    table = CountTable(c)
    for n in range(n_max + 1):
        for k in k_range(c, n):
            table.entries[n, k] = _CLOSED_FORMS[c](n, k)
    return table


# -- brute force ----------------------------------------------------------------


def brute_force_limit(c: ClassId | str) -> int:
    override = os.environ.get(ENV_LIMIT)
    if override:
        return int(override)
    return MAX_MATCHING_N if ClassId(c).is_matching_class else MAX_PARTITION_N


def _check_guard(c: ClassId, n: int, limit: int | None) -> None:
    limit = brute_force_limit(c) if limit is None else limit
    if n > limit:
        raise EnumerationLimitError(
            f"refusing to enumerate class {c.value} on [{n}]: guard is n <= {limit} "
            f"(override with {ENV_LIMIT})"
        )


def bruteforce_row(c: ClassId | str, n: int, limit: int | None = None) -> dict[int, int]:
    """Exhaustive counts of class ``c`` on [n] for every ``k`` in one pass."""
    c = ClassId(c)
    _check_guard(c, n, limit)
    tally: Counter[int] = Counter()
    for d in class_members(c, n):
        tally[n - d.k if c is ClassId.S else d.k] += 1
    return dict(sorted(tally.items()))


def count_bruteforce(c: ClassId | str, n: int, k: int | None = None, limit: int | None = None) -> int:
    """``|class_members(c, n, k)|`` by exhaustion, subject to the enumeration guard."""
    c = ClassId(c)
    _check_guard(c, n, limit)
    return sum(1 for _ in class_members(c, n, k))
