from fractions import Fraction
from math import comb, factorial, isqrt

import pytest
from hypothesis import given, strategies as st

from anosov import InputError, Partition, SimpleGraph, compute_X, is_anosov
from anosov.bounds import (
    Interval,
    big_one_bounds,
    family_alpha,
    family_k_range,
    family_members,
    family_size,
    matrix_upper_envelope,
    nu_family_count,
    nu_lower_bound,
    product_lower_bound,
    sqrt_enclosure,
    string_lower_bound,
    vertex_edge_family,
)
from anosov.canon import ir_code
from anosov.census import graph_classes
from anosov.graph import is_connected
from anosov.partitions import arrangements, iter_partitions, partitions
from anosov.quotient import check_anosov_criteria, deconstruct

X_SMALL = {1: 2, 2: 4}


# ---------------------------------------------------------------- partitions


def test_partition_counts():
    assert len(partitions(4, 1)) == 5
    assert [p.parts for p in partitions(6, 3)] == [(6,), (3, 3)]
    assert [p.parts for p in partitions(9, 2)] == [
        (9,), (7, 2), (6, 3), (5, 4), (5, 2, 2), (4, 3, 2), (3, 3, 3), (3, 2, 2, 2)
    ]
    assert [len(partitions(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_partition_parsing_and_validation():
    assert Partition.parse("3,3,2") == Partition((3, 3, 2))
    assert Partition.parse("2^2,1^5").parts == (2, 2, 1, 1, 1, 1, 1)
    assert str(Partition((3, 3, 2))) == "(3,3,2)"
    with pytest.raises(InputError):
        Partition((2, 3))
    with pytest.raises(InputError):
        Partition((2, 0))
    with pytest.raises(InputError):
        Partition.parse("a,b")


def test_arrangements():
    assert arrangements((7,)) == 1
    assert arrangements((3, 3, 2)) == 3
    assert arrangements((4, 3, 2)) == 6


@given(st.integers(0, 18), st.integers(1, 4))
def test_partitions_are_reverse_lex_and_complete(n, j):
    parts = [p.parts for p in iter_partitions(n, j)]
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts)
    assert all(sum(p) == n and (not p or min(p) >= j) for p in parts)


# ------------------------------------------------------------ big-one bounds


def test_big_one_bounds_at_six():
    report = big_one_bounds(6, {**X_SMALL, 3: compute_X(3)})
    assert report.lower == 3
    assert report.upper == 1 * 2 + 2 * 4 + 1 * 4 + 1 * compute_X(3)
    assert [lam.parts for lam, _, _ in report.upper_terms] == [(6,), (4, 2), (3, 3), (2, 2, 2)]
    assert "X(3)" in report.witness()


def test_big_one_bounds_needs_every_x():
    with pytest.raises(InputError, match=r"X\(3\)"):
        big_one_bounds(6, X_SMALL)


# ------------------------------------------------------- vertex+edge bounds


def test_sqrt_enclosure():
    assert sqrt_enclosure(144) == Interval(Fraction(12), Fraction(12))
    r = sqrt_enclosure(2)
    assert r.width < Fraction(1, 10**12)
    assert r.lo**2 < 2 < r.hi**2
    with pytest.raises(InputError):
        sqrt_enclosure(-1)


def test_nu_at_72_is_exact():
    assert nu_lower_bound(72, "improved") == Interval(Fraction(15, 2), Fraction(15, 2))
    assert nu_lower_bound(72, "dani-mainkar") == Interval(Fraction(19, 12), Fraction(19, 12))


def test_nu_enclosures_are_tight():
    for w in range(1, 500):
        for formula in ("improved", "dani-mainkar"):
            assert nu_lower_bound(w, formula).width < Fraction(1, 10**9)


def test_newer_bound_dominates_only_from_39_on():
    # the difference is w/4 - (3/4) sqrt(2w) - 37/12, negative below w = 39
    dominated = [
        w for w in range(10, 10**4 + 1)
        if nu_lower_bound(w, "improved").lo < nu_lower_bound(w, "dani-mainkar").hi
    ]
    assert dominated == list(range(10, 39))


def test_family_sizes():
    assert family_size(3, 2, 2, False) == (8, 12)
    assert family_size(2, 1, 3, True) == (7, 13)
    path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    g = deconstruct(vertex_edge_family(3, 2, 2, False, path))
    assert (g.n, g.m) == (8, 12)


def test_family_input_errors():
    edge = SimpleGraph.complete(2)
    with pytest.raises(InputError):
        vertex_edge_family(2, 1, 2, True, edge)
    with pytest.raises(InputError):
        vertex_edge_family(2, 0, 3, False, SimpleGraph.empty(2))
    with pytest.raises(InputError):
        vertex_edge_family(3, 1, 3, False, edge)


def test_family_closed_forms_exhaustive():
    for k in range(1, 5):
        for code in graph_classes(k):
            h = code.graph()
            if not is_connected(h):
                continue
            for loop0 in (False, True):
                for q in range(3 if loop0 else 2, 6):
                    w = vertex_edge_family(k, h.m, q, loop0, h)
                    assert check_anosov_criteria(w)
                    g = deconstruct(w)
                    assert is_anosov(g)
                    assert (g.n, g.m) == family_size(k, h.m, q, loop0)


def test_family_count_below_threshold():
    assert nu_family_count(9) == 0
    assert family_members(9) == []


def test_family_count_at_least_interval_estimate():
    # integers in [sqrt(alpha), (alpha + 2) / 3] number at least (alpha - 3 sqrt(alpha) - 1) / 3
    for w in range(19, 400):
        for loop0 in (False, True):
            if loop0 and w <= 18:
                continue
            alpha = family_alpha(w, loop0)
            if alpha < 1:
                continue
            estimate = (alpha - 3 * sqrt_upper(alpha) - 1) / 3
            assert len(family_k_range(w, loop0)) >= estimate


def test_sharper_per_family_estimate_fails_at_85():
    # alpha = 73/2 for the looped family: 6 admissible k, but (alpha - 3 sqrt(alpha)) / 3 > 6.1
    alpha = family_alpha(85, True)
    assert alpha == Fraction(73, 2)
    assert len(family_k_range(85, True)) == 6
    assert (alpha - 3 * sqrt_upper(alpha)) / 3 > 6


def sqrt_upper(x: Fraction) -> Fraction:
    return Fraction(isqrt(x.numerator * 10**24 // x.denominator) + 1, 10**12)


@pytest.mark.parametrize("w", range(20, 41, 4))
def test_family_members_realize_w(w):
    members = family_members(w)
    for m in members:
        g = deconstruct(m.graph)
        assert is_anosov(g)
        assert g.n + g.m == w
    assert nu_family_count(w) > nu_lower_bound(w, "improved").hi


def test_family_count_beats_bound_on_sweep():
    assert all(nu_family_count(w) > nu_lower_bound(w, "improved").hi for w in range(10, 3000))


def test_family_members_pairwise_distinct():
    for w in range(10, 31):
        codes = [ir_code(deconstruct(m.graph)) for m in family_members(w)]
        assert len(set(codes)) == len(codes)


# ------------------------------------------------------------- X(t) bounds


def test_product_bound_values():
    assert product_lower_bound(2) == 6
    assert product_lower_bound(3) == 28
    with pytest.raises(InputError):
        product_lower_bound(1)


@pytest.mark.parametrize("t", range(2, 6))
def test_x_bounds(t):
    x = compute_X(t)
    assert product_lower_bound(t) <= x * factorial(t)
    assert 2**t <= x * factorial(t)
    assert string_lower_bound(t) <= x
    assert x <= matrix_upper_envelope(t) == 2 ** comb(t + 1, 2)


def test_published_upper_estimate_is_not_an_upper_bound():
    # 2^C(t+1,2) / t! is below X(t) at t = 3
    assert Fraction(matrix_upper_envelope(3), factorial(3)) < compute_X(3)
