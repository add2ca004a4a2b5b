"""Numeric bounds on Anosov graph counts, and the two edge/vertex families.

Integer-valued formulas are evaluated exactly.  Formulas with a square root
return an :class:`Interval` of rationals whose width is below ``1e-12``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, floor, isqrt, prod
from typing import Mapping

from .errors import InputError
from .graph import SimpleGraph, is_connected
from .partitions import Partition, arrangements, iter_partitions
from .quotient import WeightedGraph

SQRT_DIGITS = 15


@dataclass(frozen=True)
class Interval:
    """Closed rational enclosure ``[lo, hi]``; ``lo == hi`` when exact."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)

    def __str__(self) -> str:
        if self.exact:
            return str(self.lo)
        return f"{float(self):.12g}"


def sqrt_enclosure(x: int) -> Interval:
    """Rational bounds on the square root of a nonnegative integer."""
    if x < 0:
        raise InputError(f"square root of negative {x}")
    root = isqrt(x)
    if root * root == x:
        return Interval(Fraction(root), Fraction(root))
    scale = 10**SQRT_DIGITS
    s = isqrt(x * scale * scale)
    return Interval(Fraction(s, scale), Fraction(s + 1, scale))


def _affine(sqrt: Interval, const: Fraction, coef: Fraction) -> Interval:
    """``const + coef * sqrt`` for a negative ``coef``."""
    return Interval(const + coef * sqrt.hi, const + coef * sqrt.lo)


class NuFormula(enum.Enum):
    IMPROVED = "improved"
    DANI_MAINKAR = "dani-mainkar"


def nu_lower_bound(w: int, formula: NuFormula | str = NuFormula.IMPROVED) -> Interval:
    """Lower bound on the number of Anosov graphs with ``n + m = w``.

    ``IMPROVED``: ``w/3 - sqrt(2w) - 9/2``.
    ``DANI_MAINKAR`` (the earlier bound): ``(w - 3 sqrt(2w) - 17) / 12``.
    """
    formula = NuFormula(formula)
    if w < 1:
        raise InputError(f"w must be positive, got {w}")
    root = sqrt_enclosure(2 * w)
    if formula is NuFormula.IMPROVED:
        return _affine(root, Fraction(w, 3) - Fraction(9, 2), Fraction(-1))
    return _affine(root, Fraction(w - 17, 12), Fraction(-3, 12))


# --------------------------------------------------------------------------
# the two constructive families behind the vertex-plus-edge bound
# --------------------------------------------------------------------------


def vertex_edge_family(
    k: int, p: int, q: int, loop0: bool, h: SimpleGraph
) -> WeightedGraph:
    """Weighted graph: hub 0 of weight ``q`` joined to vertex 1 of a weight-2 copy of ``h``.

    Vertices ``1..k`` carry weight 2 and the edges of ``h`` (shifted by one);
    the hub carries a loop iff ``loop0``.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    if q < (3 if loop0 else 2):
        raise InputError(f"hub weight {q} too small ({'looped hub needs q >= 3' if loop0 else 'q >= 2'})")
    if h.n != k:
        raise InputError(f"h has {h.n} vertices, expected k = {k}")
    if h.m != p:
        raise InputError(f"h has {h.m} edges, expected p = {p}")
    if not k - 1 <= p <= comb(k, 2):
        raise InputError(f"p = {p} outside [k-1, C(k,2)] = [{k - 1}, {comb(k, 2)}]")
    if not is_connected(h):
        raise InputError("h must be connected")
    edges = [(0, 1)] + [(u + 1, v + 1) for u, v in h.edges()]
    if loop0:
        edges.append((0, 0))
    return WeightedGraph.from_edges((q,) + (2,) * k, edges)


def family_size(k: int, p: int, q: int, loop0: bool) -> tuple[int, int]:
    """``(n, m)`` of the deconstruction of a family member."""
    n = 2 * k + q
    m = (q * q + 3 * q + 8 * p) // 2 if loop0 else 4 * p + 2 * q
    return n, m


def family_hub_weight(w: int, loop0: bool) -> int:
    """Hub weight chosen by parity of ``w``: 2/3 without a loop, 4/3 with one."""
    if loop0:
        return 4 if w % 2 == 0 else 3
    return 2 if w % 2 == 0 else 3


def family_alpha(w: int, loop0: bool) -> Fraction:
    if loop0:
        return Fraction(w - 18, 2) if w % 2 == 0 else Fraction(w - 12, 2)
    return Fraction(w - 6, 2) if w % 2 == 0 else Fraction(w - 9, 2)


def _ceil_sqrt(x: Fraction) -> int:
    """Smallest integer ``c >= 0`` with ``c*c >= x``."""
    if x <= 0:
        return 0
    c = isqrt(floor(x))
    while c * c < x:
        c += 1
    return c


def family_k_range(w: int, loop0: bool) -> range:
    """Integers ``k`` in ``[sqrt(alpha), (alpha + 2) / 3]``."""
    alpha = family_alpha(w, loop0)
    if alpha < 0:
        return range(0)
    return range(_ceil_sqrt(alpha), floor((alpha + 2) / 3) + 1)


def family_applies(w: int, loop0: bool) -> bool:
    return w > 18 if loop0 else w > 9


def nu_family_count(w: int) -> int:
    """Number of admissible ``k`` summed over the applicable families (0 for ``w <= 9``)."""
    return sum(len(family_k_range(w, loop0)) for loop0 in (False, True) if family_applies(w, loop0))


@dataclass(frozen=True)
class FamilyMember:
    loop0: bool
    k: int
    p: int
    q: int
    h: SimpleGraph
    graph: WeightedGraph = field(repr=False)


def family_members(w: int) -> list[FamilyMember]:
    """Every family member realizing ``n + m = w``, one per connected ``h`` up to isomorphism.

    For each admissible ``k`` the edge count is ``p = (alpha - k) / 2``; a
    ``k`` contributes only when that ``p`` is an integer in ``[k-1, C(k,2)]``.
    """
    from .census import graph_classes

    out = []
    for loop0 in (False, True):
        if not family_applies(w, loop0):
            continue
        q = family_hub_weight(w, loop0)
        alpha = family_alpha(w, loop0)
        for k in family_k_range(w, loop0):
            p2 = alpha - k
            if p2.denominator != 1 or p2.numerator % 2:
                continue
            p = p2.numerator // 2
            if not k - 1 <= p <= comb(k, 2):
                continue
            for code in graph_classes(k):
                h = code.graph()
                if h.m == p and is_connected(h):
                    out.append(FamilyMember(loop0, k, p, q, h, vertex_edge_family(k, p, q, loop0, h)))
    return out


# --------------------------------------------------------------------------
# bounds in terms of the vertex count
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    n: int
    lower: Fraction
    upper: int
    lower_terms: tuple[tuple[Partition, int], ...]
    upper_terms: tuple[tuple[Partition, int, int], ...]

    def witness(self) -> str:
        low = " + ".join(f"X({len(lam)})" for lam, _ in self.lower_terms) or "0"
        up = " + ".join(f"{a}*X({len(lam)})" for lam, a, _ in self.upper_terms) or "0"
        return f"lower = 1/2 ({low}); upper = {up}"


def big_one_bounds(n: int, X: Mapping[int, int]) -> BoundReport:
    """Sandwich of a(n) from partitions of ``n`` and the matrix counts ``X``."""

    def x(t: int) -> int:
        if t not in X:
            raise InputError(f"X({t}) is required but was not supplied")
        return X[t]

    lower_terms = tuple((lam, x(len(lam))) for lam in iter_partitions(n, 3))
    upper_terms = tuple(
        (lam, arrangements(lam), x(len(lam))) for lam in iter_partitions(n, 2)
    )
    lower = Fraction(sum(v for _, v in lower_terms), 2)
    upper = sum(a * v for _, a, v in upper_terms)
    return BoundReport(n, lower, upper, lower_terms, upper_terms)


def product_lower_bound(t: int) -> int:
    """``2^(t-1) (2^t - 1) prod_{i=2}^{t-1} max(2^(t-i) - i, 1)``, a lower bound on X(t)·t!."""
    if t < 2:
        raise InputError(f"product bound is defined for t >= 2, got {t}")
    return 2 ** (t - 1) * (2**t - 1) * prod(max(2 ** (t - i) - i, 1) for i in range(2, t))


def string_lower_bound(t: int) -> Fraction:
    """``2^t / t!``, from the injective string-to-matrix construction."""
    return Fraction(2**t, factorial(t))


def matrix_upper_envelope(t: int) -> int:
    """Number of symmetric binary t x t matrices, a sound upper bound on X(t)."""
    return 2 ** (t * (t + 1) // 2)
