"""Named self-check suites used by ``nestwork verify``.

Each suite walks every object up to a size bound and stops at the first
counterexample, which is reported in canonical JSON.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import patterns, series
from .bijections import alpha, alpha_inv, beta, beta_inv, gamma, gamma_inv, Q_FORBIDDEN, R_FORBIDDEN
from .diagram import Diagram
from .enumeration import ClassId, all_partitions, bruteforce_row, class_members, count, k_range
from .patterns import PatternKind

# 4296 at n=10 is the x^10 coefficient of sum_n prod_{k<=n} (1 + kx) x^n;
# some printed listings carry 4290 there.
A124380 = (1, 2, 4, 9, 22, 57, 157, 453, 1368, 4296)
A024428 = (1, 1, 2, 4, 8, 18, 42, 102, 260, 684, 1860)

SUITES = ("oracle", "roundtrip-alpha", "roundtrip-beta", "roundtrip-gamma", "oeis", "statistics")


@dataclass
class SuiteResult:
    suite: str
    max_n: int
    checked: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


class _Failure(Exception):
    def __init__(self, payload: dict) -> None:
        super().__init__(payload)
        self.payload = payload


def _fail(**payload) -> None:
    raise _Failure(payload)


def _r_members(max_n: int) -> Iterator[Diagram]:
    for n in range(max_n + 1):
        yield from class_members(ClassId.R, n)


def _oracle(max_n: int) -> Iterator[None]:
    for c in (ClassId.P, ClassId.Q, ClassId.R, ClassId.T):
        top = min(max_n, 10) if c is ClassId.T else max_n
        for n in range(top + 1):
            brute = bruteforce_row(c, n)
            for k in k_range(c, n):
                closed = count(c, n, k)
                if closed != brute.get(k, 0):
                    _fail(**{"class": c.value, "n": n, "k": k, "closed_form": closed, "brute_force": brute.get(k, 0)})
                yield


def _roundtrip_alpha(max_n: int) -> Iterator[None]:
    for m in range(1, max_n + 1):
        for p in all_partitions(m):
            a = alpha(p)
            if not patterns.avoids(a, Q_FORBIDDEN) or alpha_inv(a) != p:
                _fail(input=p.to_json(), image=a.to_json())
            yield


def _roundtrip_beta(max_n: int) -> Iterator[None]:
    for m in _r_members(max_n):
        b = beta(m)
        back = beta_inv(b)
        if back != m or beta(back) != b:
            _fail(input=m.to_json(), profile=b.to_json())
        yield


def _roundtrip_gamma(max_n: int) -> Iterator[None]:
    for m in _r_members(max_n):
        g = gamma(m, strict=True)
        if patterns.contains(g, PatternKind.RIGHT_NESTING) or gamma_inv(g) != m:
            _fail(input=m.to_json(), image=g.to_json())
        yield


def _oeis(max_n: int) -> Iterator[None]:
    top = max(max_n, 1)
    p_series = series.gf_p(top).row_sums()
    q_series = series.gf_q(top).row_sums()
    for n in range(1, top + 1):
        routes = {
            "count_p": count(ClassId.P, n),
            "gf_p": p_series[n],
            "fn_poly": series.fn_poly(n)(1),
        }
        if n <= len(A124380):
            routes["reference"] = A124380[n - 1]
        if len(set(routes.values())) != 1:
            _fail(sequence="A124380", n=n, values=routes)
        yield
        routes = {"gf_q": q_series[n], "gn_poly": series.gn_poly(n)(1)}
        if n <= len(A024428):
            routes["reference"] = A024428[n - 1]
        if len(set(routes.values())) != 1:
            _fail(sequence="A024428", n=n, values=routes)
        yield


def _statistics(max_n: int) -> Iterator[None]:
    for m in range(1, max_n + 1):
        for p in all_partitions(m):
            a = alpha(p)
            if patterns.count_transients(p) != patterns.count(a, PatternKind.LEFT_CROSSING):
                _fail(map="alpha", input=p.to_json(), image=a.to_json())
            yield
    for m in _r_members(max_n):
        g = gamma(m)
        if patterns.count(m, PatternKind.LEFT_CROSSING) != patterns.count_transients(g):
            _fail(map="gamma", input=m.to_json(), image=g.to_json())
        yield


_RUNNERS: dict[str, Callable[[int], Iterator[None]]] = {
    "oracle": _oracle,
    "roundtrip-alpha": _roundtrip_alpha,
    "roundtrip-beta": _roundtrip_beta,
    "roundtrip-gamma": _roundtrip_gamma,
    "oeis": _oeis,
    "statistics": _statistics,
}


def run_suite(name: str, max_n: int) -> SuiteResult:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    result = SuiteResult(name, max_n)
    try:
        for _ in _RUNNERS[name](max_n):
            result.checked += 1
    except _Failure as failure:
        result.counterexample = failure.payload
    return result


def run(name: str, max_n: int) -> list[SuiteResult]:
    names = SUITES if name == "all" else (name,)
    return [run_suite(n, max_n) for n in names]
