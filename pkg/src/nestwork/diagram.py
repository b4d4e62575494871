"""Arc diagrams (linear representations) of set partitions and partial matchings.

A partition of ``[n]`` is drawn by writing each block ``{i1 < i2 < ... < im}``
as the arcs ``(i1, i2), (i2, i3), ...``.  Partial matchings are the diagrams
in which no vertex is both a left-hand and a right-hand endpoint.  Vertices
are 1-indexed throughout.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

Arc = tuple[int, int]
Blocks = tuple[tuple[int, ...], ...]


class Role(Enum):
    SINGLETON = "singleton"
    ORIGIN = "origin"
    TRANSIENT = "transient"
    DESTINATION = "destination"


@dataclass(frozen=True)
class Diagram:
    """Vertex count plus a canonically ordered tuple of arcs ``(i, j)``, ``i < j``."""

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        arcs = tuple(sorted((int(i), int(j)) for i, j in self.arcs))
        lefts: set[int] = set()
        rights: set[int] = set()
        for i, j in arcs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"arc {(i, j)} is not a valid arc on [{self.n}]")
            if i in lefts:
                raise ValueError(f"vertex {i} is the left-hand endpoint of two arcs")
            if j in rights:
                raise ValueError(f"vertex {j} is the right-hand endpoint of two arcs")
            lefts.add(i)
            rights.add(j)
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def _trusted(cls, n: int, arcs: tuple[Arc, ...]) -> Diagram:
        # generators emit canonical arcs already; skip revalidation
        d = object.__new__(cls)
        object.__setattr__(d, "n", n)
        object.__setattr__(d, "arcs", arcs)
        return d

    @property
    def k(self) -> int:
        """Number of arcs."""
        return len(self.arcs)

    def successor(self) -> dict[int, int]:
        """Map each left-hand endpoint to the right-hand endpoint of its arc."""
        return dict(self.arcs)

    def predecessor(self) -> dict[int, int]:
        return {j: i for i, j in self.arcs}

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [[i, j] for i, j in self.arcs]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> Diagram:
        try:
            return cls(int(obj["n"]), tuple((int(a), int(b)) for a, b in obj.get("arcs", [])))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed diagram object: {obj!r}") from exc

    @classmethod
    def loads(cls, text: str) -> Diagram:
        return cls.from_json(json.loads(text))


def from_blocks(blocks: Iterable[Iterable[int]], n: int | None = None) -> Diagram:
    """Linear representation of the partition with the given blocks.

    ``n`` defaults to the largest element; the blocks must cover ``1..n``
    exactly.
    """
    normalized = [sorted(b) for b in blocks]
    elements = [v for b in normalized for v in b]
    if any(not b for b in normalized):
        raise ValueError("empty block")
    if n is None:
        n = max(elements, default=0)
    if len(elements) != len(set(elements)):
        raise ValueError("blocks overlap")
    if set(elements) != set(range(1, n + 1)):
        raise ValueError(f"blocks do not partition [1..{n}]")
    arcs = [(b[t], b[t + 1]) for b in normalized for t in range(len(b) - 1)]
    return Diagram(n, tuple(arcs))


def to_blocks(d: Diagram) -> Blocks:
    """Blocks of the partition drawn by ``d``, sorted by minimum element."""
    succ = d.successor()
    has_pred = {j for _, j in d.arcs}
    blocks = []
    for v in range(1, d.n + 1):
        if v in has_pred:
            continue
        block = [v]
        while block[-1] in succ:
            block.append(succ[block[-1]])
        blocks.append(tuple(block))
    return tuple(blocks)


def roles(d: Diagram) -> tuple[Role, ...]:
    """Role of every vertex, index 0 holding vertex 1."""
    lefts = {i for i, _ in d.arcs}
    rights = {j for _, j in d.arcs}
    out = []
    for v in range(1, d.n + 1):
        if v in lefts:
            out.append(Role.TRANSIENT if v in rights else Role.ORIGIN)
        else:
            out.append(Role.DESTINATION if v in rights else Role.SINGLETON)
    return tuple(out)


def role_of(d: Diagram, v: int) -> Role:
    if not 1 <= v <= d.n:
        raise ValueError(f"vertex {v} out of range 1..{d.n}")
    return roles(d)[v - 1]


def is_partial_matching(d: Diagram) -> bool:
    lefts = {i for i, _ in d.arcs}
    return all(j not in lefts for _, j in d.arcs)


def singletons(d: Diagram) -> list[int]:
    touched = {v for arc in d.arcs for v in arc}
    return [v for v in range(1, d.n + 1) if v not in touched]


def from_sequence(tokens: Sequence[object], links: dict[object, object]) -> Diagram:
    """Label a sequence of distinct vertex tokens 1..len and translate token links to arcs."""
    position = {tok: idx + 1 for idx, tok in enumerate(tokens)}
    return Diagram(len(tokens), tuple((position[a], position[b]) for a, b in links.items()))


def dump_blocks(blocks: Blocks) -> list[list[int]]:
    return sorted(sorted(b) for b in blocks)
