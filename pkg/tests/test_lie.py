from fractions import Fraction

import pytest

from anosov import InputError, SimpleGraph, build_lie_algebra, verify_two_step
from anosov.census import graph_classes
from anosov.lie import GraphLieAlgebra, center_contains_edges


def test_heisenberg():
    alg = build_lie_algebra(SimpleGraph.complete(2))
    assert alg.dim == 3
    assert alg.labels == ("v0", "v1", "e0_1")
    assert alg.bracket({0: Fraction(1)}, {1: Fraction(1)}) == {2: Fraction(1)}
    assert alg.bracket({1: Fraction(1)}, {0: Fraction(1)}) == {2: Fraction(-1)}
    assert alg.bracket({0: Fraction(1)}, {2: Fraction(1)}) == {}


def test_dimensions():
    assert build_lie_algebra(SimpleGraph.complete(3)).dim == 6
    abelian = build_lie_algebra(SimpleGraph.empty(4))
    assert abelian.dim == 4 and abelian.brackets == {}
    assert verify_two_step(abelian)
    with pytest.raises(InputError):
        build_lie_algebra(SimpleGraph.empty(0))


@pytest.mark.parametrize("n", range(1, 6))
def test_every_small_graph(n):
    for code in graph_classes(n):
        g = code.graph()
        alg = build_lie_algebra(g)
        assert alg.dim == g.n + g.m
        assert verify_two_step(alg)
        assert center_contains_edges(alg, g.n)


def test_negative_controls():
    # [x, [x, y]] = y: three-step, not two-step
    bad = GraphLieAlgebra(("x", "y"), {(0, 1): {1: Fraction(1)}, (1, 0): {1: Fraction(-1)}})
    assert not verify_two_step(bad)
    asymmetric = GraphLieAlgebra(("x", "y", "z"), {(0, 1): {2: Fraction(1)}})
    assert not verify_two_step(asymmetric)


def test_structure_constants_json():
    alg = build_lie_algebra(SimpleGraph.from_edges(3, [(0, 2)]))
    assert alg.structure_constants() == [
        {"i": "v0", "j": "v2", "k": "e0_2", "c": "1"},
        {"i": "v2", "j": "v0", "k": "e0_2", "c": "-1"},
    ]
