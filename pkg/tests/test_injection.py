import pytest

from anosov import DomainError, Method, Partition, enumerate_anosov, inject, is_anosov, verify_injection
from anosov.injection import CASES, case_for, matching_cases
from anosov.partitions import iter_partitions, partitions
from anosov.quotient import WeightedGraph, check_brick_conditions, deconstruct, weighted_canonical_code, weighted_isomorphic


def test_triangle_case():
    w = inject((3, 3, 3))
    assert weighted_isomorphic(w, WeightedGraph.from_edges([3, 3, 3], [(0, 1), (1, 2), (0, 2)]))


def test_single_one_case_builds_k4():
    w = inject((8, 1))
    assert w.weights == (2, 3, 2, 2)
    assert w.loops() == (False, True, False, False)
    assert len([e for e in w.edges() if e[0] != e[1]]) == 6


def test_all_ones_case():
    w = inject((1,) * 9)
    assert w.weights == (3, 3, 3)
    assert all(w.loops())
    assert w.edges() == [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)]


def test_case_13_has_no_loops():
    w = inject((2, 2, 2, 1, 1, 1))
    assert case_for(Partition((2, 2, 2, 1, 1, 1))).id == 13
    assert not any(w.loops())
    assert sorted(w.weights) == [2, 2, 2, 3]


def test_domain():
    with pytest.raises(DomainError):
        inject((4, 4))
    with pytest.raises(DomainError):
        verify_injection(8)
    with pytest.raises(DomainError):
        verify_injection(15)
    with pytest.raises(ValueError):
        inject((9,), variant="other")


@pytest.mark.parametrize("n", range(9, 15))
def test_exactly_one_case_fires(n):
    for lam in iter_partitions(n):
        assert len(matching_cases(lam)) == 1


def test_case_ids():
    assert [c.id for c in CASES] == list(range(1, 15))


@pytest.mark.parametrize("n", range(9, 15))
@pytest.mark.parametrize("variant", ["published", "corrected"])
def test_images_are_valid_quotients(n, variant):
    for lam in iter_partitions(n):
        w = inject(lam, variant)
        assert w.total_weight == n
        assert check_brick_conditions(w)
        g = deconstruct(w)
        assert is_anosov(g)


def test_published_case_7_collides():
    a = inject((3, 3, 2, 1))
    b = inject((4, 2, 2, 1))
    assert weighted_canonical_code(a) == weighted_canonical_code(b)
    report = verify_injection(9)
    assert not report.ok
    assert any("(3,3,2,1)" in v and "(4,2,2,1)" in v for v in report.violations)


@pytest.mark.parametrize("n", range(9, 15))
def test_corrected_variant_is_injective(n):
    report = verify_injection(n, variant="corrected")
    assert report.ok, report.lines()
    assert report.distinct_images == len(partitions(n))
    assert report.lines()[0].startswith("PASS")


def test_partition_count_below_census():
    for n in range(9, 13):
        assert len(partitions(n)) <= enumerate_anosov(n, Method.QUOTIENT).count
