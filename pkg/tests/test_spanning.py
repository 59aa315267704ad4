import pytest
from hypothesis import given, settings

from akgraph import generators as gen
from akgraph.exceptions import (
    DisconnectedGraphError,
    NotATreeError,
    PreconditionError,
    TreeCapExceeded,
)
from akgraph.graph import (
    Graph,
    is_biconnected,
    is_cycle,
    is_isomorphic,
    is_spanning_tree_of,
    labeled_graphs,
    odd_component_count,
)
from akgraph.spanning import (
    any_spanning_tree,
    bollobas_structure,
    enumerate_spanning_trees,
    is_minimally_2connected,
    lemma23_witness_tree,
    minimally_2connected_spanning,
    tree_perfect_matching,
    tree_pm_criterion,
)
from conftest import graphs
from oracles import perfect_matchings_bf, spanning_trees_bf


class TestAnySpanningTree:
    def test_examples(self):
        assert any_spanning_tree(gen.cycle_graph(4)).edges == ((0, 1), (0, 3), (1, 2))
        assert any_spanning_tree(gen.complete_graph(2)) == gen.complete_graph(2)
        assert is_isomorphic(any_spanning_tree(gen.complete_graph(3)), gen.path_graph(3))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            any_spanning_tree(Graph(3, [(0, 1)]))


class TestEnumeration:
    @pytest.mark.parametrize(
        "g, count",
        [
            (gen.complete_graph(3), 3),
            (gen.complete_graph(4), 16),
            (gen.cycle_graph(4), 4),
            (gen.cycle_graph(6), 6),
            (gen.complete_graph(5), 125),
            (gen.petersen_graph(), 2000),
            (gen.complete_graph(1), 1),
        ],
    )
    def test_counts(self, g, count):
        trees = list(enumerate_spanning_trees(g))
        assert len(trees) == count == len(set(trees))

    @settings(max_examples=150)
    @given(graphs(max_n=7, connected=True))
    def test_against_subset_filter(self, g):
        got = list(enumerate_spanning_trees(g))
        assert sorted(got) == spanning_trees_bf(g)
        assert got == list(enumerate_spanning_trees(g))

    def test_cap(self):
        with pytest.raises(TreeCapExceeded) as info:
            list(enumerate_spanning_trees(gen.complete_graph(4), cap=10))
        assert info.value.count == 10

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            list(enumerate_spanning_trees(Graph(2)))


class TestTreeMatching:
    def test_examples(self):
        assert tree_perfect_matching(gen.path_graph(4)).edges == {(0, 1), (2, 3)}
        assert tree_perfect_matching(gen.path_graph(3)) is None
        assert tree_perfect_matching(gen.star_graph(3)) is None
        assert tree_pm_criterion(gen.path_graph(2))
        assert tree_pm_criterion(gen.path_graph(4))
        assert not tree_pm_criterion(gen.star_graph(3))

    def test_not_tree(self):
        with pytest.raises(NotATreeError):
            tree_pm_criterion(gen.cycle_graph(4))
        with pytest.raises(NotATreeError):
            tree_perfect_matching(Graph(3, [(0, 1)]))

    def test_criterion_agrees_on_all_small_trees(self):
        for n in range(1, 8):
            for g in labeled_graphs(n, connected=True):
                for t in enumerate_spanning_trees(g):
                    tree = Graph(n, t)
                    m = tree_perfect_matching(tree)
                    assert (m is not None) == tree_pm_criterion(tree)
                if n >= 6:
                    break  # one source graph (K_n-ish subsets) is plenty at this size

    @given(graphs(max_n=10, connected=True))
    def test_matches_pm_enumeration(self, g):
        t = any_spanning_tree(g)
        pms = perfect_matchings_bf(t)
        m = tree_perfect_matching(t)
        assert len(pms) <= 1
        assert (m.edges if m else None) == (pms[0] if pms else None)


class TestMinimally2Connected:
    def test_k4(self):
        h = minimally_2connected_spanning(gen.complete_graph(4))
        assert is_cycle(h) and h.n == 4

    def test_already_minimal(self):
        assert minimally_2connected_spanning(gen.cycle_graph(6)) == gen.cycle_graph(6)
        k23 = gen.complete_bipartite(2, 3)
        assert minimally_2connected_spanning(k23) == k23

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            minimally_2connected_spanning(gen.path_graph(4))

    @settings(max_examples=200)
    @given(graphs(min_n=3, max_n=8))
    def test_output_minimal(self, g):
        if not is_biconnected(g):
            return
        h = minimally_2connected_spanning(g)
        assert h.n == g.n and set(h.edges) <= set(g.edges)
        assert is_biconnected(h)
        for e in h.edges:
            assert not is_biconnected(h.remove_edges([e]))


class TestBollobas:
    def test_k23(self):
        st = bollobas_structure(gen.complete_bipartite(2, 3))
        assert st.degree_two == {2, 3, 4}
        assert st.forest_vertices == {0, 1} and len(st.trees) == 2

    def test_theta(self):
        st = bollobas_structure(gen.theta_graph(2, 3, 3))
        assert st.forest_vertices == {0, 1}

    def test_cycle_rejected(self):
        with pytest.raises(PreconditionError):
            bollobas_structure(gen.cycle_graph(5))

    def test_not_minimal_rejected(self):
        with pytest.raises(PreconditionError):
            bollobas_structure(gen.complete_graph(4))

    def test_all_minimal_order_6(self):
        seen = 0
        for g in labeled_graphs(6, connected=True):
            if is_minimally_2connected(g) and not is_cycle(g):
                bollobas_structure(g)
                seen += 1
        assert seen > 0


class TestLemma23Witness:
    def test_diamond(self, diamond):
        t = lemma23_witness_tree(diamond)
        assert is_isomorphic(t, gen.star_graph(3))
        assert t.degree(0) == 3 or t.degree(2) == 3  # centered on a chord end
        assert not tree_pm_criterion(t)

    def test_k4(self):
        t = lemma23_witness_tree(gen.complete_graph(4))
        assert not tree_pm_criterion(t)
        assert any(sum(t.degree(w) == 1 for w in t.neighbors(v)) >= 2 for v in t.vertices)

    def test_k23_case_two(self):
        g = gen.complete_bipartite(2, 3)
        assert not is_cycle(minimally_2connected_spanning(g))
        t = lemma23_witness_tree(g)
        assert is_spanning_tree_of(t.edges, g) and not tree_pm_criterion(t)
        assert any(sum(t.degree(w) == 1 for w in t.neighbors(v)) >= 2 for v in t.vertices)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            lemma23_witness_tree(gen.cycle_graph(6))
        with pytest.raises(PreconditionError):
            lemma23_witness_tree(gen.cycle_graph(5))
        with pytest.raises(PreconditionError):
            lemma23_witness_tree(gen.path_graph(4))

    def test_order_4_chord_positions(self):
        # every Hamilton-cycle-plus-chord shape on four vertices
        for g in labeled_graphs(4):
            if is_biconnected(g) and not is_cycle(g):
                t = lemma23_witness_tree(g)
                assert is_spanning_tree_of(t.edges, g)
                assert any(odd_component_count(t, (v,)) >= 3 for v in t.vertices)

    def test_all_order_6(self):
        for g in labeled_graphs(6):
            if is_biconnected(g) and not is_cycle(g):
                t = lemma23_witness_tree(g)
                assert is_spanning_tree_of(t.edges, g) and tree_perfect_matching(t) is None
