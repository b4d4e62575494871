"""Exact truncated bivariate power series and the neighbor-pattern generating functions.

Series live in ``Z[[x]][y]`` truncated at x-order ``N`` and never carry a
``y`` power above the ``x`` power of the same term (every arc or block uses
at least one vertex).  Quotients are expanded as geometric or
negative-binomial series, so everything stays in exact integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping


class TruncationMismatch(ValueError):
    pass


@dataclass(frozen=True)
class BivariatePoly:
    """Coefficients ``c[n][k]`` of ``x^n y^k`` for ``0 <= k <= n <= order``."""

    order: int
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coeffs) != self.order + 1 or any(
            len(row) != n + 1 for n, row in enumerate(self.coeffs)
        ):
            raise ValueError("coefficient rows must have shape [n][0..n] for n <= order")

    @classmethod
    def zero(cls, order: int) -> BivariatePoly:
        return cls(order, tuple((0,) * (n + 1) for n in range(order + 1)))

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], int], order: int) -> BivariatePoly:
        """Build from ``{(n, k): c}``; terms with ``n > order`` are dropped."""
        rows = [[0] * (n + 1) for n in range(order + 1)]
        for (n, k), c in terms.items():
            if k < 0 or n < 0 or k > n:
                raise ValueError(f"term x^{n} y^{k} violates 0 <= k <= n")
            if n <= order:
                rows[n][k] += c
        return cls(order, tuple(tuple(r) for r in rows))

    @classmethod
    def one(cls, order: int) -> BivariatePoly:
        return cls.from_terms({(0, 0): 1}, order)

    @classmethod
    def monomial(cls, n: int, k: int, order: int, c: int = 1) -> BivariatePoly:
        return cls.from_terms({(n, k): c}, order)

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if 0 <= n <= self.order and 0 <= k <= n:
            return self.coeffs[n][k]
        return 0

    def terms(self) -> Iterable[tuple[int, int, int]]:
        for n, row in enumerate(self.coeffs):
            for k, c in enumerate(row):
                if c:
                    yield n, k, c

    def _check(self, other: BivariatePoly) -> None:
        if not isinstance(other, BivariatePoly):
            raise TypeError(f"expected BivariatePoly, got {type(other).__name__}")
        if other.order != self.order:
            raise TruncationMismatch(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        self._check(other)
        return BivariatePoly(
            self.order,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: BivariatePoly) -> BivariatePoly:
        return self + other.scale(-1)

    def scale(self, c: int) -> BivariatePoly:
        return BivariatePoly(self.order, tuple(tuple(c * a for a in r) for r in self.coeffs))

    def __mul__(self, other: BivariatePoly) -> BivariatePoly:
        self._check(other)
        N = self.order
        rows = [[0] * (n + 1) for n in range(N + 1)]
        rhs = list(other.terms())
        for n1, k1, c1 in self.terms():
            for n2, k2, c2 in rhs:
                if n1 + n2 > N:
                    continue
                rows[n1 + n2][k1 + k2] += c1 * c2
        return BivariatePoly(N, tuple(tuple(r) for r in rows))

    def derivative_y(self) -> BivariatePoly:
        return BivariatePoly(
            self.order,
            tuple(
                tuple((k + 1) * row[k + 1] if k + 1 < len(row) else 0 for k in range(len(row)))
                for row in self.coeffs
            ),
        )

    def row(self, n: int) -> tuple[int, ...]:
        return self.coeffs[n]

    def row_sums(self) -> tuple[int, ...]:
        """Coefficients of ``x^n`` after substituting ``y = 1``."""
        return tuple(sum(row) for row in self.coeffs)

    def triangle(self) -> list[list[int]]:
        return [list(row) for row in self.coeffs]


def add(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    return p + q


def mul(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    return p * q


def formal_derivative_y(p: BivariatePoly) -> BivariatePoly:
    return p.derivative_y()


def geometric_inverse(q: BivariatePoly, order: int | None = None) -> BivariatePoly:
    """``1 / (1 - q)`` as the truncated sum of powers of ``q``; ``q`` must vanish at 0."""
    if order is not None and order != q.order:
        raise TruncationMismatch(f"truncation orders differ: {order} vs {q.order}")
    if q[0, 0] != 0:
        raise ValueError("geometric_inverse needs a series with zero constant term")
    one = BivariatePoly.one(q.order)
    result = one
    # q has x-valuation >= 1, so order+1 Horner steps reach every kept term
    for _ in range(q.order):
        result = one + q * result
    return result


def inverse_power_one_minus_xy(m: int, order: int) -> BivariatePoly:
    """``(1 - xy)^(-m)`` via the negative-binomial coefficients ``C(m+j-1, j)``."""
    return BivariatePoly.from_terms({(j, j): comb(m + j - 1, j) for j in range(order + 1)}, order)


def gf_p(order: int) -> BivariatePoly:
    """Sum over m >= 1 of ``x^m * prod_{i=1..m} (1 + i x y)``, truncated."""
    if order < 1:
        raise ValueError("order must be >= 1")
    total = BivariatePoly.zero(order)
    one = BivariatePoly.one(order)
    for m in range(1, order + 1):
        term = BivariatePoly.monomial(m, 0, order)
        for i in range(1, m + 1):
            term = term * (one + BivariatePoly.monomial(1, 1, order, i))
        total = total + term
    return total


def gf_q(order: int) -> BivariatePoly:
    """Sum over m >= 1 of ``x^m / prod_{i=1..m} (1 - i x^2 y)``, truncated."""
    if order < 1:
        raise ValueError("order must be >= 1")
    total = BivariatePoly.zero(order)
    for m in range(1, order + 1):
        term = BivariatePoly.monomial(m, 0, order)
        for i in range(1, m + 1):
            term = term * geometric_inverse(BivariatePoly.monomial(2, 1, order, i))
        total = total + term
    return total


def gf_rt(order: int) -> BivariatePoly:
    """Sum over m >= 1 of ``x^m / (1 - xy)^C(m+1, 2)``, truncated.

    ``c[n][k]`` counts partitions of [n] with k arcs and no right nesting,
    equivalently the matchings of [n+k-1] with k arcs avoiding neighbor
    alignments and both neighbor nestings.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    terms: dict[tuple[int, int], int] = {}
    for m in range(1, order + 1):
        width = comb(m + 1, 2)
        for j in range(order - m + 1):
            terms[m + j, j] = terms.get((m + j, j), 0) + comb(width + j - 1, j)
    return BivariatePoly.from_terms(terms, order)


@lru_cache(maxsize=None)
def _stirling_rows(n: int) -> tuple[tuple[int, ...], ...]:
    rows: list[tuple[int, ...]] = [(1,)]
    for m in range(1, n + 1):
        prev = rows[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = (k * prev[k] if k < m else 0) + prev[k - 1]
        rows.append(tuple(row))
    return tuple(rows)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind ``S(n, k)``."""
    if not 0 <= k <= n:
        raise ValueError(f"stirling2({n}, {k}) needs 0 <= k <= n")
    return _stirling_rows(n)[n][k]


@dataclass(frozen=True)
class UnivariatePoly:
    """Integer polynomial in ``y``; ``coeffs[k]`` multiplies ``y^k``, trailing zeros trimmed."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __add__(self, other: UnivariatePoly) -> UnivariatePoly:
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return UnivariatePoly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: UnivariatePoly) -> UnivariatePoly:
        return self + other.scale(-1)

    def scale(self, c: int) -> UnivariatePoly:
        return UnivariatePoly(tuple(c * a for a in self.coeffs))

    def shift(self, e: int = 1) -> UnivariatePoly:
        """Multiply by ``y^e``."""
        if not self.coeffs:
            return self
        return UnivariatePoly((0,) * e + self.coeffs)

    def derivative(self) -> UnivariatePoly:
        return UnivariatePoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def __call__(self, y: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0


def fn_poly(n: int) -> UnivariatePoly:
    """Row polynomial ``sum_k P(n, k) y^k`` from its three-term recurrence."""
    if n < 1:
        raise ValueError("fn_poly needs n >= 1")
    f = [UnivariatePoly((1,)), UnivariatePoly((1,)), UnivariatePoly((1, 1))]
    for m in range(3, n + 1):
        a, b = f[m - 1], f[m - 2]
        f.append(a + b.shift().scale(m - 1) - b.derivative().shift(2))
    return f[n]


def gn_poly(n: int) -> UnivariatePoly:
    """Row polynomial ``sum_k Q(n-1, k) y^k`` from its three-term recurrence."""
    if n < 1:
        raise ValueError("gn_poly needs n >= 1")
    g = [UnivariatePoly((1,)), UnivariatePoly((1,)), UnivariatePoly((1,))]
    for m in range(3, n + 1):
        a, b = g[m - 1], g[m - 2]
        g.append(a + b.shift().scale(m - 2) - b.derivative().shift(2).scale(2))
    return g[n]
