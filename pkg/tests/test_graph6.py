import networkx as nx
import pytest
from hypothesis import given

from anosov import ParseError, SimpleGraph
from anosov import graph6
from anosov.graph import all_labeled_graphs
from oracles import graph6_reference
from strategies import graphs


def test_triangle():
    assert graph6.encode(SimpleGraph.complete(3)) == "Bw"


def test_header_is_optional():
    text = graph6.encode(SimpleGraph.complete(3), header=True)
    assert text == ">>graph6<<Bw"
    assert graph6.decode(text) == SimpleGraph.complete(3)


@pytest.mark.parametrize("n", range(6))
def test_round_trip_all_small_graphs(n):
    for g in all_labeled_graphs(n):
        assert graph6.decode(graph6.encode(g)) == g


@given(graphs(max_n=12))
def test_matches_reference_encoders(g):
    text = graph6.encode(g)
    assert text == graph6_reference(g.n, set(g.edges()))
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert text.encode() == nx.to_graph6_bytes(h, header=False).strip()


def test_large_vertex_count_form():
    g = SimpleGraph.from_edges(70, [(0, 69), (5, 6)])
    text = graph6.encode(g)
    assert text[0] == "~"
    assert graph6.decode(text) == g


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("B", 1), ("Bww", 2), ("B\x7f", 1), ("Bx", 1)],
)
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        graph6.decode(text)
    assert info.value.offset == offset
    assert f"byte {offset}" in str(info.value)
