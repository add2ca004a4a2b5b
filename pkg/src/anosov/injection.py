"""An injection from partitions of ``n >= 9`` into Anosov quotient graphs.

Write a partition as a body of parts ``>= 2`` followed by ``t`` ones.  Each
of the fourteen cases below builds a weighted graph whose weights sum to
``n`` and which passes the brick conditions, so its deconstruction is an
Anosov graph on ``n`` vertices with that weighted graph as its quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .errors import DomainError
from .partitions import Partition, iter_partitions
from .quotient import (
    WeightedCode,
    WeightedGraph,
    check_brick_conditions,
    deconstruct,
    weighted_canonical_code,
)

MIN_N = 9
DEFAULT_VERIFY_LIMIT = 14
VARIANTS = ("published", "corrected")


def _split(lam: Partition) -> tuple[tuple[int, ...], int]:
    body = tuple(p for p in lam.parts if p >= 2)
    return body, len(lam) - len(body)


def _graph(weights, edges, loops=()) -> WeightedGraph:
    return WeightedGraph.from_edges(weights, list(edges) + [(i, i) for i in loops])


def _path(count: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(count - 1)]


def _case1(body, t):
    return _graph(body, [], loops=[0])


def _case2(body, t):
    return _graph(body, [(0, 1)])


def _case3(body, t):
    return _graph(body, [(0, 1), (1, 2), (0, 2)])


def _case4(body, t):
    return _graph(body, _path(len(body)))


def _case5(body, t):
    # looped hub of weight l1 - 5 inside a K4 with three weight-2 vertices
    (l1,) = body
    return _graph((2, l1 - 5, 2, 2), combinations(range(4), 2), loops=[1])


def _case6(body, t):
    l1, l2 = body
    return _graph((l1 - 1, l2, 2), [(0, 1), (0, 2), (1, 2)], loops=[0])


def _case7(body, t):
    l1, l2, l3 = body
    return _graph((l1, l3, l2 + 1), [(0, 1), (1, 2)], loops=[0, 2])


def _case7_reordered(body, t):
    # same weights as case 7, open vertex moved to the end of the path
    l1, l2, l3 = body
    return _graph((l3, l2 + 1, l1), [(0, 1), (1, 2)], loops=[1, 2])


def _case8(body, t):
    l1, l2, l3, l4 = body
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    return _graph((l1 + 1, l2, l3, l4), edges, loops=[0])


def _case9(body, t):
    # cycle l_k, l1+1, l2, ..., l_{k-1} back to l_k, plus the chord l_k -- l2
    k = len(body)
    weights = (body[-1], body[0] + 1) + body[1:-1]
    edges = _path(k) + [(k - 1, 0), (0, 2)]
    return _graph(weights, edges, loops=[1])


def _case10(body, t):
    weights = body + (t,)
    return _graph(weights, _path(len(weights)), loops=[0])


def _case11(body, t):
    return _graph((2, t - 4, 2, 2), [(0, 1), (1, 2), (2, 3)], loops=[1])


def _case12(body, t):
    return _graph((2, t - 2, 2, 2), [(0, 1), (0, 2), (1, 2), (2, 3)], loops=[1])


def _case13(body, t):
    k = len(body)
    return _graph((2,) * k + (t,), combinations(range(k + 1), 2))


def _case14(body, t):
    return _graph((3, t - 6, 3), [(0, 1), (1, 2)], loops=[0, 1, 2])


@dataclass(frozen=True)
class InjectionCase:
    id: int
    description: str
    guard: Callable[[tuple[int, ...], int], bool] = field(repr=False)
    builder: Callable[[tuple[int, ...], int], WeightedGraph] = field(repr=False)


CASES: tuple[InjectionCase, ...] = (
    InjectionCase(1, "one part: looped vertex", lambda b, t: t == 0 and len(b) == 1, _case1),
    InjectionCase(2, "two parts: edge", lambda b, t: t == 0 and len(b) == 2, _case2),
    InjectionCase(3, "three parts: triangle", lambda b, t: t == 0 and len(b) == 3, _case3),
    InjectionCase(4, "four or more parts: path", lambda b, t: t == 0 and len(b) >= 4, _case4),
    InjectionCase(5, "(l1, 1)", lambda b, t: t == 1 and len(b) == 1, _case5),
    InjectionCase(6, "(l1, l2, 1)", lambda b, t: t == 1 and len(b) == 2, _case6),
    InjectionCase(7, "(l1, l2, l3, 1)", lambda b, t: t == 1 and len(b) == 3, _case7),
    InjectionCase(8, "(l1, ..., l4, 1)", lambda b, t: t == 1 and len(b) == 4, _case8),
    InjectionCase(9, "(l1, ..., lk, 1), k >= 5", lambda b, t: t == 1 and len(b) >= 5, _case9),
    InjectionCase(
        10, "(l1, ..., lk, 1^t), l1 >= 3, t >= 2", lambda b, t: t >= 2 and len(b) >= 1 and b[0] >= 3, _case10
    ),
    InjectionCase(11, "(2, 1^t)", lambda b, t: t >= 2 and b == (2,), _case11),
    InjectionCase(12, "(2, 2, 1^t)", lambda b, t: t >= 2 and b == (2, 2), _case12),
    InjectionCase(
        13, "(2^k, 1^t), k >= 3", lambda b, t: t >= 2 and len(b) >= 3 and b[0] == 2, _case13
    ),
    InjectionCase(14, "(1^t)", lambda b, t: len(b) == 0, _case14),
)


def matching_cases(lam: Partition) -> list[InjectionCase]:
    body, t = _split(lam)
    return [case for case in CASES if case.guard(body, t)]


def case_for(lam: Partition | tuple[int, ...]) -> InjectionCase:
    lam = Partition.of(lam)
    if lam.n < MIN_N:
        raise DomainError(f"the injection is defined for n >= {MIN_N}, got n = {lam.n}")
    cases = matching_cases(lam)
    if len(cases) != 1:
        raise AssertionError(f"{lam} matches cases {[c.id for c in cases]}, expected exactly one")
    return cases[0]


def inject(lam: Partition | tuple[int, ...], variant: str = "published") -> WeightedGraph:
    """Image of ``lam``.

    ``variant="published"`` draws case 7 as the path ``l1* -- l3 -- (l2+1)*``
    (stars mark loops).  That map is not injective: ``(3,3,2,1)`` and
    ``(4,2,2,1)`` give the same weighted path with its ends swapped.
    ``variant="corrected"`` uses ``l3 -- (l2+1)* -- l1*`` instead.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    lam = Partition.of(lam)
    case = case_for(lam)
    body, t = _split(lam)
    builder = _case7_reordered if case.id == 7 and variant == "corrected" else case.builder
    w = builder(body, t)
    if w.total_weight != lam.n:
        raise AssertionError(f"case {case.id} image of {lam} has weight {w.total_weight}")
    if not check_brick_conditions(w):
        raise AssertionError(f"case {case.id} image of {lam} fails the brick conditions")
    return w


@dataclass
class InjectionReport:
    n: int
    variant: str
    partitions: int
    anosov_images: int
    distinct_images: int
    violations: list[str]
    case_counts: dict[int, int]

    @property
    def ok(self) -> bool:
        return not self.violations and self.distinct_images == self.partitions

    def lines(self) -> list[str]:
        status = "PASS" if self.ok else "FAIL"
        out = [
            f"{status} n={self.n} variant={self.variant} p(n)={self.partitions} distinct={self.distinct_images} "
            f"anosov={self.anosov_images}",
            "cases: " + " ".join(f"{c}:{k}" for c, k in sorted(self.case_counts.items())),
        ]
        out += [f"violation: {v}" for v in self.violations]
        return out


def verify_injection(
    n: int, limit: int = DEFAULT_VERIFY_LIMIT, variant: str = "published"
) -> InjectionReport:
    """Check every partition of ``n``: valid image, Anosov deconstruction, no collisions."""
    from .equivalence import is_anosov

    if n < MIN_N:
        raise DomainError(f"the injection is defined for n >= {MIN_N}, got n = {n}")
    if n > limit:
        raise DomainError(f"verification limited to n <= {limit}, got n = {n}")
    seen: dict[WeightedCode, Partition] = {}
    violations = []
    anosov = 0
    total = 0
    counts: dict[int, int] = {}
    for lam in iter_partitions(n):
        total += 1
        try:
            case = case_for(lam)
            w = inject(lam, variant)
        except AssertionError as exc:
            violations.append(str(exc))
            continue
        counts[case.id] = counts.get(case.id, 0) + 1
        g = deconstruct(w)
        if g.n == n and is_anosov(g):
            anosov += 1
        else:
            violations.append(f"{lam}: deconstruction is not an Anosov graph on {n} vertices")
        code = weighted_canonical_code(w)
        if code in seen:
            violations.append(f"{lam} and {seen[code]} have isomorphic images")
        else:
            seen[code] = lam
    return InjectionReport(n, variant, total, anosov, len(seen), violations, counts)
