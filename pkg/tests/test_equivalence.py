import json

import pytest
from hypothesis import given

from anosov import ClassKind, InputError, SimpleGraph, decompose, graph_type, is_anosov
from anosov.census import graph_classes
from anosov.equivalence import anosov_violation, count_by_type, is_anosov_fast, similar
from anosov.graph import is_connected
from named_graphs import K2, K32, K32_PLUS, STAR, TYPE_332
from oracles import reference_is_anosov, twin_classes
from strategies import graphs


def test_similar_on_type_332_example():
    assert similar(TYPE_332, 0, 1)
    assert not similar(TYPE_332, 0, 3)
    assert all(similar(TYPE_332, v, v) for v in range(8))
    with pytest.raises(InputError):
        similar(TYPE_332, 0, 8)


def test_decompose_type_332_example():
    dec = decompose(TYPE_332)
    assert dec.classes == ((0, 1, 2), (3, 4, 5), (6, 7))
    assert dec.kinds == (ClassKind.COMPLETE, ClassKind.EDGELESS, ClassKind.EDGELESS)
    assert dec.type.parts == (3, 3, 2)


def test_decompose_complete_and_star():
    dec = decompose(SimpleGraph.complete(4))
    assert dec.type.parts == (4,) and dec.kinds == (ClassKind.COMPLETE,)
    dec = decompose(STAR)
    assert dec.classes == ((0, 1, 2), (3,))
    assert dec.kinds[1] is ClassKind.EDGELESS  # singleton convention


def test_decompose_json_report():
    data = json.loads(decompose(TYPE_332).to_json())
    assert data["type"] == [3, 3, 2]
    assert data["classes"][0] == {"vertices": [0, 1, 2], "kind": "complete"}


def test_anosov_examples():
    assert is_anosov(K32)
    assert not is_anosov(K32_PLUS)
    assert not is_anosov(STAR)
    assert not is_anosov(K2)


def test_violation_messages_name_the_witness():
    assert anosov_violation(K2) == "class {0,1} has size 2 and is complete"
    assert anosov_violation(STAR) == "class {3} has size 1"
    assert anosov_violation(SimpleGraph.from_edges(6, [(0, 1), (0, 2), (3, 4), (3, 5)])) == "graph is disconnected"


def test_allow_disconnected():
    two_squares = SimpleGraph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
    assert not is_anosov(two_squares)
    assert is_anosov(two_squares, allow_disconnected=True)


def test_empty_graph_rejected():
    with pytest.raises(InputError):
        decompose(SimpleGraph.empty(0))
    with pytest.raises(InputError):
        is_anosov(SimpleGraph.empty(0))


def test_count_by_type():
    four = [code.graph() for code in graph_classes(4)]
    # a single twin class on four vertices: K4 and the edgeless graph
    assert count_by_type(four, (4,)) == 2
    k2_plus_two = SimpleGraph.from_edges(4, [(0, 1)])
    assert count_by_type([k2_plus_two], (2, 2)) == 1
    assert count_by_type([SimpleGraph.from_edges(4, [(0, 1), (1, 2)])], (2, 1, 1)) == 1
    with pytest.raises(InputError):
        count_by_type(four, (2, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_relation_axioms_and_class_shape(n):
    for code in graph_classes(n):
        g = code.graph()
        for x in range(n):
            for y in range(n):
                assert similar(g, x, y) == similar(g, y, x)
                if similar(g, x, y):
                    assert all(similar(g, x, z) == similar(g, y, z) for z in range(n))
        for cls, kind in zip(decompose(g).classes, decompose(g).kinds):
            inner = g.induced(cls)
            expected = 0 if kind is ClassKind.EDGELESS else len(cls) * (len(cls) - 1) // 2
            assert inner.m == expected


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("allow", [False, True])
def test_agrees_with_reference_routine(n, allow):
    for code in graph_classes(n):
        g = code.graph()
        expected = reference_is_anosov(n, g.edges(), allow)
        assert is_anosov(g, allow) == expected
        assert is_anosov_fast(g, allow) == expected


@given(graphs())
def test_classes_match_oracle(g):
    assert {frozenset(c) for c in decompose(g).classes} == set(twin_classes(g.n, g.edges()))
    sizes = [len(c) for c in decompose(g).classes]
    assert sizes == sorted(sizes, reverse=True)
    assert graph_type(g) == decompose(g).type


@given(graphs())
def test_anosov_implies_connected_with_no_singletons(g):
    if is_anosov(g):
        assert is_connected(g)
        assert graph_type(g).smallest >= 2
