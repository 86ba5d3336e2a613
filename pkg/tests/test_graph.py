import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from chordalgen.graph import (
    GraphError,
    LabeledGraph,
    Permutation,
    class_size,
    conjugator,
    cycle_type_representative,
    cycle_types,
    cycles_restricted,
    evaporation_sequence,
    glue,
    is_automorphism,
    is_chordal,
    is_peo,
    maximal_cliques,
    mcs_order,
    period,
    perfect_elimination_ordering,
    phi,
    simplicial_vertices,
)
from chordalgen.oracle import peel_chordal

from .conftest import cycle, path


@st.composite
def random_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph(range(1, n + 1), [e for e, b in zip(pairs, chosen) if b])


@st.composite
def chordal_graphs(draw, max_n=7):
    # grow by attaching each new vertex to a clique of the current graph
    n = draw(st.integers(1, max_n))
    g = LabeledGraph([1], [])
    for v in range(2, n + 1):
        cliques = [()] + [tuple(sorted(c)) for c in maximal_cliques(g)]
        base = draw(st.sampled_from(cliques))
        sub = [u for u in base if draw(st.booleans())]
        g = LabeledGraph(list(g.vertices) + [v], list(g.edges) + [(u, v) for u in sub])
    return g


class TestChordality:
    def test_c4_not_chordal(self):
        assert not is_chordal(cycle(4))

    def test_k3_chordal(self):
        assert is_chordal(LabeledGraph.complete([1, 2, 3]))

    def test_path_chordal(self, p4):
        assert is_chordal(p4)

    def test_c5_with_one_chord_not_chordal(self):
        g = LabeledGraph(range(1, 6), list(cycle(5).edges) + [(1, 3)])
        assert not is_chordal(g)

    def test_peo_returned_for_chordal(self, p4):
        order = perfect_elimination_ordering(p4)
        assert order is not None and is_peo(p4, [p4.index(v) for v in order])
        assert perfect_elimination_ordering(cycle(4)) is None

    @given(random_graphs())
    @settings(max_examples=300, deadline=None)
    def test_matches_simplicial_peeling(self, g):
        assert is_chordal(g) == peel_chordal(g.rows, g.order)

    @given(random_graphs())
    @settings(max_examples=100, deadline=None)
    def test_mcs_order_is_a_vertex_ordering(self, g):
        assert sorted(mcs_order(g)) == list(range(g.order))


class TestEvaporation:
    def test_path_no_exception(self, p4):
        ev = evaporation_sequence(p4)
        assert ev.layers == (frozenset({1, 4}), frozenset({2, 3}))
        assert ev.time == 2

    def test_path_with_exception(self, p4):
        ev = evaporation_sequence(p4, {2})
        assert ev.layers == (frozenset({1, 4}), frozenset({3}))
        assert ev.time == 2
        assert ev.last_layer == frozenset({3})

    def test_complete_graph_one_layer(self):
        ev = evaporation_sequence(LabeledGraph.complete(range(1, 6)))
        assert ev.layers == (frozenset(range(1, 6)),)

    def test_exception_is_whole_graph(self):
        ev = evaporation_sequence(LabeledGraph.complete([1, 2]), {1, 2})
        assert ev.time == 0

    def test_non_clique_exception_rejected(self, p4):
        with pytest.raises(GraphError):
            evaporation_sequence(p4, {1, 4})

    def test_non_chordal_rejected(self):
        with pytest.raises(GraphError):
            evaporation_sequence(cycle(4))

    @given(chordal_graphs(), st.data())
    @settings(max_examples=200, deadline=None)
    def test_layers_partition_and_are_simplicial(self, g, data):
        cliques = [frozenset()] + maximal_cliques(g)
        base = data.draw(st.sampled_from(cliques))
        x = frozenset(v for v in base if data.draw(st.booleans()))
        ev = evaporation_sequence(g, x)
        gone: set[int] = set()
        for layer in ev.layers:
            assert layer and not layer & (gone | x)
            rest = g.induced(set(g.vertices) - gone)
            assert layer == simplicial_vertices(rest) - x
            gone |= layer
        assert gone | x == set(g.vertices)

    @given(chordal_graphs())
    @settings(max_examples=150, deadline=None)
    def test_last_layer_of_connected_graph_is_clique(self, g):
        if g.is_connected():
            assert g.is_clique(evaporation_sequence(g).last_layer)


class TestGlueAndPhi:
    def test_two_triangles_make_diamond(self):
        g = glue(LabeledGraph.complete([1, 2, 3]), LabeledGraph.complete([2, 3, 4]))
        assert g.edge_count == 5 and not g.has_edge(1, 4)

    def test_disjoint_glue(self):
        g = glue(LabeledGraph([1], []), LabeledGraph([2], []))
        assert g.vertices == (1, 2) and g.edge_count == 0

    def test_glue_idempotent(self, p4):
        assert glue(p4, p4) == p4

    def test_glue_disagreeing_overlap(self):
        with pytest.raises(GraphError):
            glue(LabeledGraph([1, 2], [(1, 2)]), LabeledGraph([1, 2], []))

    @given(chordal_graphs(max_n=5), chordal_graphs(max_n=5), st.data())
    @settings(max_examples=100, deadline=None)
    def test_glue_along_clique_is_chordal(self, g1, g2, data):
        c1 = sorted(data.draw(st.sampled_from(maximal_cliques(g1))))
        c2 = sorted(data.draw(st.sampled_from(maximal_cliques(g2))))
        r = min(len(c1), len(c2))
        shared = c1[:r]
        off = max(g1.vertices)
        mapping = {v: v + off for v in g2.vertices}
        mapping.update(dict(zip(c2[:r], shared)))
        assert is_chordal(glue(g1, g2.relabel(mapping)))

    def test_phi(self):
        assert phi([2, 5, 9], [1, 3, 4]) == {2: 1, 5: 3, 9: 4}
        assert phi([3, 1], [1, 3]) == {1: 1, 3: 3}
        assert phi([], []) == {}

    def test_phi_size_mismatch(self):
        with pytest.raises(GraphError):
            phi([1, 2], [1])


class TestPermutation:
    def test_parse_forms_agree(self):
        assert Permutation.parse("(1 2)(3 4 5)") == Permutation.parse("2,1,4,5,3")
        assert Permutation.parse("(1 2)", 4).image == (2, 1, 3, 4)

    def test_parse_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Permutation.parse("(1 5)", 3)

    def test_cycle_type_and_order(self):
        p = Permutation.parse("(1 2)(3 4 5)")
        assert p.cycle_type == (3, 2) and p.order == 6 and p.moved == (1, 2, 3, 4, 5)
        assert p.power(6).is_identity() and p.power(3) == Permutation.parse("(1 2)", 5)

    def test_inverse_and_conjugate(self):
        p = Permutation.parse("(1 2 3)", 4)
        assert p.compose(p.inverse()).is_identity()
        s = Permutation.parse("(3 4)", 4)
        assert p.conjugate_by(s) == Permutation.parse("(1 2 4)", 4)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_conjugator(self, n):
        for ct in cycle_types(n):
            tau = cycle_type_representative(n, ct)
            target = tau.conjugate_by(Permutation(list(range(n, 0, -1))))
            sigma = conjugator(tau, target)
            assert tau.conjugate_by(sigma) == target

    @pytest.mark.parametrize("n", range(1, 7))
    def test_class_sizes_sum_to_factorial(self, n):
        import math
        assert sum(class_size(n, ct) for ct in cycle_types(n)) == math.factorial(n)

    def test_period(self):
        assert period(1, {1, 3}, Permutation.parse("(1 2 3 4)")) == 2
        assert period(2, {2, 3}, Permutation.identity(4)) == 1
        assert period(1, {1}, Permutation.parse("(1 2 3)")) == 3

    def test_cycles_restricted(self):
        assert set(cycles_restricted(Permutation.parse("(1 2)(3 4)"), 1, {1, 2, 3, 4})) == {
            frozenset({1, 2}), frozenset({3, 4})}
        assert set(cycles_restricted(Permutation.parse("(1 2 3 4)"), 2, {1, 2, 3, 4})) == {
            frozenset({1, 3}), frozenset({2, 4})}
        assert cycles_restricted(Permutation.parse("(1 2)"), 1, set()) == []


class TestAutomorphism:
    def test_triangle_rotation(self):
        assert is_automorphism(LabeledGraph.complete([1, 2, 3]), Permutation.parse("(1 2 3)"))

    def test_path_leaf_swap(self):
        assert is_automorphism(path(3), Permutation.parse("(1 3)"))

    def test_path_degree_mismatch(self):
        assert not is_automorphism(path(3), Permutation.parse("(1 2)"))

    def test_power(self):
        g = cycle(4)
        assert is_automorphism(g, Permutation.parse("(1 2 3 4)"))
        assert is_automorphism(g, Permutation.parse("(1 2)(3 4)"), power=2)

    def test_noninvariant_vertex_set(self):
        with pytest.raises(GraphError):
            is_automorphism(LabeledGraph([1, 2], []), Permutation.parse("(2 3)"))
