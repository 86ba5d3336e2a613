import io
import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from chordalgen.formats import from_graph6, read_edge_lists, to_edge_list, to_graph6
from chordalgen.graph import GraphError, LabeledGraph


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if not pairs:
        return LabeledGraph(range(1, n + 1), [])
    edges = draw(st.lists(st.sampled_from(pairs), max_size=60))
    return LabeledGraph(range(1, n + 1), edges)


def test_two_vertex_graphs():
    assert to_graph6(LabeledGraph([1, 2], [])) == "A?"
    assert to_graph6(LabeledGraph([1, 2], [(1, 2)])) == "A_"


def test_known_encoding():
    # 5-cycle 1-2-3-4-5-1
    g = LabeledGraph(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert to_graph6(g) == "Dhc"


@given(graphs())
def test_graph6_round_trip(g):
    text = to_graph6(g)
    assert from_graph6(text) == g
    assert to_graph6(from_graph6(text)) == text


def test_large_header():
    g = LabeledGraph(range(1, 64), [(1, 63)])
    assert to_graph6(g).startswith("~??~")
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "A_?", "B~", "A`"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


@given(st.lists(graphs(max_n=6), max_size=5))
def test_edge_list_round_trip(gs):
    n = 6
    gs = [LabeledGraph(range(1, n + 1), g.edges) for g in gs]
    text = "".join(to_edge_list(g) for g in gs)
    assert list(read_edge_lists(io.StringIO(text), n)) == gs
