from hypothesis import strategies as st

from anosov import SimpleGraph, WeightedGraph


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return SimpleGraph.from_edges(n, chosen)


@st.composite
def weighted_graphs(draw, max_k=5, max_weight=4):
    k = draw(st.integers(1, max_k))
    weights = draw(st.lists(st.integers(1, max_weight), min_size=k, max_size=k))
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    return WeightedGraph.from_edges(weights, chosen)


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))
