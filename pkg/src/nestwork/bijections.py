"""The bijections alpha, beta, gamma and their inverses.

* ``alpha``: partitions of [n-k] with k arcs  ->  matchings of [n-1] with k
  arcs avoiding neighbor alignments and left nestings.  Transients become
  left crossings.
* ``beta``: matchings with k arcs and s-1 singletons avoiding neighbor
  alignments, left and right nestings  ->  compositions of k into
  s(s+1)/2 parts, grouped per interval between consecutive singletons.
* ``gamma``: the same matchings on [n] with k arcs  ->  partitions of
  [n-k+1] with k arcs and no right nesting.  Left crossings become
  transients.

All constructions work on a mutable sequence of opaque vertex tokens and
assign integer labels only when the result is frozen into a ``Diagram``;
inserting or deleting a token relabels everything to its right for free.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from math import comb, isqrt
from typing import Iterator, Sequence

from . import patterns
from .diagram import Diagram, from_sequence, is_partial_matching
from .patterns import PatternKind

Q_FORBIDDEN = (PatternKind.NEIGHBOR_ALIGNMENT, PatternKind.LEFT_NESTING)
R_FORBIDDEN = Q_FORBIDDEN + (PatternKind.RIGHT_NESTING,)


class PreconditionError(ValueError):
    """Input lies outside the domain of the requested map."""


class ConstructionError(RuntimeError):
    """An internal step of a construction found an impossible configuration."""


@dataclass(frozen=True)
class Composition:
    """Weak composition: nonnegative parts, zeros allowed."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise ValueError("composition parts must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def compositions(total: int, parts: int) -> Iterator[Composition]:
    """All ``C(total + parts - 1, total)`` weak compositions, largest first part first."""
    if total < 0 or parts < 0:
        raise ValueError("total and parts must be nonnegative")
    if parts == 0:
        if total:
            raise ValueError("cannot split a positive total into zero parts")
        yield Composition(())
        return

    def rec(rest: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (rest,)
            return
        for head in range(rest, -1, -1):
            for tail in rec(rest - head, slots - 1):
                yield (head,) + tail

    for parts_ in rec(total, parts):
        yield Composition(parts_)


@dataclass(frozen=True)
class IntervalProfile:
    """Per-interval arc counts ``blocks[i][j - i]`` = arcs from interval i into interval j.

    With ``s`` intervals, block ``i`` (0-based) has ``s - i`` entries.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(v) for v in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        s = len(blocks)
        if s == 0:
            raise ValueError("a profile has at least one interval")
        for i, b in enumerate(blocks):
            if len(b) != s - i:
                raise ValueError(f"block {i + 1} has length {len(b)}, expected {s - i}")
            if any(v < 0 for v in b):
                raise ValueError("profile entries must be nonnegative")

    @property
    def intervals(self) -> int:
        return len(self.blocks)

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(v for b in self.blocks for v in b)

    @property
    def total(self) -> int:
        return sum(self.flat)

    def composition(self) -> Composition:
        return Composition(self.flat)

    @classmethod
    def from_flat(cls, flat: Sequence[int]) -> IntervalProfile:
        size = len(flat)
        s = (isqrt(8 * size + 1) - 1) // 2
        if s < 1 or comb(s + 1, 2) != size:
            raise ValueError(f"length {size} is not a triangular number")
        blocks, start = [], 0
        for i in range(s):
            blocks.append(tuple(flat[start:start + s - i]))
            start += s - i
        return cls(tuple(blocks))

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks], "flat": list(self.flat), "total": self.total}

    @classmethod
    def from_json(cls, obj: dict) -> IntervalProfile:
        if "blocks" in obj:
            profile = cls(tuple(tuple(b) for b in obj["blocks"]))
            if "flat" in obj and list(profile.flat) != list(obj["flat"]):
                raise ValueError("'blocks' and 'flat' disagree")
        elif "flat" in obj:
            profile = cls.from_flat(obj["flat"])
        else:
            raise ValueError("profile object needs 'blocks' or 'flat'")
        if "total" in obj and obj["total"] != profile.total:
            raise ValueError("'total' does not match the profile entries")
        return profile


# -- token sequences -------------------------------------------------------------


class _Tokens:
    """Ordered vertex tokens plus arcs between them (at most one in, one out per token)."""

    def __init__(self, n: int = 0, arcs: Sequence[tuple[int, int]] = ()) -> None:
        self._fresh = count(n + 1)
        self.seq: list[int] = list(range(1, n + 1))
        self.succ: dict[int, int] = dict(arcs)
        self.pred: dict[int, int] = {b: a for a, b in arcs}

    def new(self) -> int:
        return next(self._fresh)

    def pos(self, tok: int) -> int:
        return self.seq.index(tok)

    def insert(self, index: int, tok: int | None = None) -> int:
        tok = self.new() if tok is None else tok
        self.seq.insert(index, tok)
        return tok

    def remove(self, tok: int) -> None:
        if tok in self.succ or tok in self.pred:
            raise ConstructionError(f"cannot delete vertex {tok}: it is an arc endpoint")
        self.seq.remove(tok)

    def link(self, a: int, b: int) -> None:
        if a in self.succ or b in self.pred:
            raise ConstructionError("vertex would receive a second arc on the same side")
        self.succ[a] = b
        self.pred[b] = a

    def unlink(self, a: int) -> int:
        b = self.succ.pop(a)
        del self.pred[b]
        return b

    def is_origin(self, tok: int) -> bool:
        return tok in self.succ and tok not in self.pred

    def is_singleton(self, tok: int) -> bool:
        return tok not in self.succ and tok not in self.pred

    def origins(self) -> list[int]:
        return [t for t in self.seq if self.is_origin(t)]

    def freeze(self) -> Diagram:
        return from_sequence(self.seq, self.succ)


def _require(d: Diagram, forbidden, what: str, matching: bool = True) -> None:
    if matching and not is_partial_matching(d):
        raise PreconditionError(f"{what} expects a partial matching")
    for kind in forbidden:
        if patterns.contains(d, kind):
            raise PreconditionError(f"{what} input contains a {kind.value}")


def _open_origins(t: _Tokens) -> None:
    """Insert a fresh vertex immediately before every origin but the first."""
    for o in t.origins()[1:]:
        t.insert(t.pos(o))


def _close_origins(t: _Tokens) -> None:
    """Delete the singleton immediately before every origin but the first."""
    for o in t.origins()[1:]:
        p = t.pos(o)
        before = t.seq[p - 1] if p > 0 else None
        if before is None or not t.is_singleton(before):
            raise ConstructionError(f"no singleton precedes the origin at position {p + 1}")
        t.remove(before)


# -- alpha -----------------------------------------------------------------------


def alpha(p: Diagram) -> Diagram:
    """Partition of [m] with k arcs -> matching of [m + k - 1] avoiding
    neighbor alignments and left nestings."""
    if p.n == 0:
        raise PreconditionError("alpha is defined on partitions of [m] with m >= 1")
    if p.k == 0:
        return Diagram(p.n - 1)
    t = _Tokens(p.n, p.arcs)
    _open_origins(t)
    while True:
        transients = [v for v in t.seq if v in t.pred and v in t.succ]
        if not transients:
            break
        j = transients[0]
        i = t.pred[j]
        k = t.unlink(j)
        fresh = t.insert(t.pos(i) + 1)
        t.link(fresh, k)
    out = t.freeze()
    assert out.n == p.n + p.k - 1
    return out


def alpha_inv(m: Diagram) -> Diagram:
    _require(m, Q_FORBIDDEN, "alpha_inv")
    if m.k == 0:
        return Diagram(m.n + 1)
    t = _Tokens(m.n, m.arcs)
    while True:
        best = None
        for idx in range(len(t.seq) - 1):
            a, b = t.seq[idx], t.seq[idx + 1]
            # only crossings whose second arc starts at an origin were made by alpha
            if a in t.succ and t.is_origin(b):
                ja, jb = t.pos(t.succ[a]), t.pos(t.succ[b])
                if idx + 1 < ja < jb:
                    best = (a, b)
        if best is None:
            break
        a, b = best
        target = t.unlink(b)
        t.remove(b)
        t.link(t.succ[a], target)
    _close_origins(t)
    out = t.freeze()
    assert out.n == m.n - m.k + 1
    return out


# -- beta ------------------------------------------------------------------------


def beta(m: Diagram) -> IntervalProfile:
    _require(m, R_FORBIDDEN, "beta")
    interval = []
    current = 0
    touched = {v for arc in m.arcs for v in arc}
    for v in range(1, m.n + 1):
        interval.append(current)
        if v not in touched:
            current += 1
    s = current + 1
    rows = [[0] * (s - i) for i in range(s)]
    for a, b in m.arcs:
        i, j = interval[a - 1], interval[b - 1]
        rows[i][j - i] += 1
    return IntervalProfile(tuple(tuple(r) for r in rows))


def beta_inv(profile: IntervalProfile | Sequence[int]) -> Diagram:
    if not isinstance(profile, IntervalProfile):
        profile = IntervalProfile.from_flat(tuple(profile))
    blocks = profile.blocks
    s = profile.intervals
    origins: list[list[int]] = []
    dests: list[list[int]] = []
    label = 0
    for i in range(s):
        if i:
            label += 1  # separating singleton
        n_orig = sum(blocks[i])
        n_dest = sum(blocks[r][i - r] for r in range(i + 1))
        origins.append(list(range(label + 1, label + n_orig + 1)))
        label += n_orig
        dests.append(list(range(label + 1, label + n_dest + 1)))
        label += n_dest
    used = [0] * s
    arcs = []
    for i in range(s):
        chosen = []
        for j in range(i, s):
            take = blocks[i][j - i]
            chosen.extend(dests[j][used[j]:used[j] + take])
            used[j] += take
        arcs.extend(zip(origins[i], chosen))
    return Diagram(label, tuple(arcs))


# -- gamma -----------------------------------------------------------------------


class _PathBuilder:
    """Grows one path per interval, placing each new right endpoint so no right nesting appears."""

    def __init__(self, intervals: int, strict: bool) -> None:
        self.t = _Tokens()
        self.seps = [self.t.insert(len(self.t.seq)) for _ in range(intervals - 1)]
        self.strict = strict

    def bounds(self, j: int) -> tuple[int, int]:
        seq = self.t.seq
        start = seq.index(self.seps[j - 1]) + 1 if j > 0 else 0
        end = seq.index(self.seps[j]) if j < len(self.seps) else len(seq)
        return start, end

    def place_origin(self, i: int) -> int:
        start, end = self.bounds(i)
        where = next((x for x in range(start, end) if self.t.seq[x] in self.t.pred), end)
        return self.t.insert(where)

    def _nests(self, left: int, index: int) -> bool:
        """Would a right endpoint at ``index``, joined to ``left``, form a right nesting?"""
        seq, pred = self.t.seq, self.t.pred
        lpos = seq.index(left)
        if index > 0 and seq[index - 1] in pred and seq.index(pred[seq[index - 1]]) > lpos:
            return True
        if index < len(seq) and seq[index] in pred and seq.index(pred[seq[index]]) < lpos:
            return True
        return False

    def extend(self, left: int, j: int) -> int:
        start, end = self.bounds(j)
        lpos = self.t.seq.index(left)
        first = max(start, lpos + 1)
        candidates = [x for x in range(first, end) if self.t.seq[x] in self.t.pred] + [end]
        ok = [x for x in candidates if not self._nests(left, x)]
        if not ok:
            raise ConstructionError("no insertion point avoids a right nesting")
        if self.strict and len(ok) > 1:
            raise ConstructionError(f"insertion point is not unique: candidates {ok}")
        right = self.t.insert(ok[0])
        self.t.link(left, right)
        return right


def gamma(m: Diagram, strict: bool = False) -> Diagram:
    """Matching of [n] with k arcs in class R -> partition of [n-k+1] with k arcs, no right nesting.

    With ``strict`` set, every arc insertion also checks that exactly one
    candidate position is free of right nestings.
    """
    profile = beta(m)
    if m.k == 0:
        return Diagram(m.n + 1)
    out = _paths_from_profile(profile, strict)
    assert out.n == m.n - m.k + 1
    return out


def _paths_from_profile(profile: IntervalProfile, strict: bool = False) -> Diagram:
    s = profile.intervals
    builder = _PathBuilder(s, strict)
    for i, block in enumerate(profile.blocks):
        if not sum(block):
            continue
        cur = builder.place_origin(i)
        for offset, hits in enumerate(block):
            for _ in range(hits):
                cur = builder.extend(cur, i + offset)
    _close_origins(builder.t)
    return builder.t.freeze()


def _profile_from_paths(p: Diagram) -> IntervalProfile:
    t = _Tokens(p.n, p.arcs)
    _open_origins(t)
    interval: dict[int, int] = {}
    current = 0
    for tok in t.seq:
        interval[tok] = current
        if t.is_singleton(tok):
            current += 1
    s = current + 1
    rows = [[0] * (s - i) for i in range(s)]
    seen = set()
    for o in t.origins():
        i = interval[o]
        if i in seen:
            raise ConstructionError("two origins share an interval")
        seen.add(i)
        v = o
        while v in t.succ:
            v = t.succ[v]
            rows[i][interval[v] - i] += 1
    return IntervalProfile(tuple(tuple(r) for r in rows))


def gamma_inv(p: Diagram) -> Diagram:
    _require(p, (PatternKind.RIGHT_NESTING,), "gamma_inv", matching=False)
    if p.k == 0:
        if p.n == 0:
            raise PreconditionError("gamma_inv is defined on partitions of [m] with m >= 1")
        return Diagram(p.n - 1)
    out = beta_inv(_profile_from_paths(p))
    assert out.n == p.n + p.k - 1
    return out
