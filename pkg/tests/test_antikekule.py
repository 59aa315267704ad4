from itertools import combinations

import pytest
from hypothesis import given, settings

from akgraph import generators as gen
from akgraph.antikekule import AkKind, anti_kekule_number, is_anti_kekule_set
from akgraph.exceptions import BoundExhausted, DisconnectedGraphError, GraphError
from akgraph.graph import Graph
from conftest import graphs


class TestIsAntiKekuleSet:
    def test_k4_triangle(self):
        assert is_anti_kekule_set(gen.complete_graph(4), [(0, 1), (0, 2), (1, 2)])

    def test_single_cycle_edge(self):
        # removing one edge of C6 leaves P6, which still has a perfect matching
        assert not is_anti_kekule_set(gen.cycle_graph(6), [(0, 1)])

    def test_disconnecting(self):
        assert not is_anti_kekule_set(gen.path_graph(4), [(1, 2)])

    def test_not_an_edge(self):
        with pytest.raises(GraphError):
            is_anti_kekule_set(gen.path_graph(4), [(0, 2)])


class TestNumber:
    def test_k4(self):
        r = anti_kekule_number(gen.complete_graph(4))
        assert r.kind is AkKind.NUMBER and r.value == 3

    def test_zero(self):
        r = anti_kekule_number(gen.star_graph(3), all_min_sets=True)
        assert r.kind is AkKind.ZERO and r.value == 0 and r.sets == [()]

    def test_none(self):
        for g in (gen.cycle_graph(6), gen.corona(gen.complete_graph(3)), gen.path_graph(4)):
            r = anti_kekule_number(g)
            assert r.kind is AkKind.NONE_EXISTS and r.as_json_value() == "none"

    def test_k6(self):
        assert anti_kekule_number(gen.complete_graph(6)).value == 6

    def test_fixed_double_shortcut(self):
        # two triangles joined by an edge: the bridge is forced, a triangle edge is fixed double
        g = Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
        assert anti_kekule_number(g).value == 1

    def test_all_min_sets(self):
        r = anti_kekule_number(gen.complete_graph(4), all_min_sets=True)
        assert r.value == 3
        # removing a star isolates its center, so only the four triangles remain
        assert len(r.sets) == 4
        for s in r.sets:
            assert is_anti_kekule_set(gen.complete_graph(4), s)

    def test_bound(self):
        with pytest.raises(BoundExhausted):
            anti_kekule_number(gen.complete_graph(4), max_k=2)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            anti_kekule_number(Graph(4, [(0, 1), (2, 3)]))


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=6, connected=True))
def test_minimality(g):
    r = anti_kekule_number(g)
    if r.kind is not AkKind.NUMBER:
        return
    assert not any(is_anti_kekule_set(g, s) for s in combinations(g.edges, r.value - 1))
    assert any(is_anti_kekule_set(g, s) for s in combinations(g.edges, r.value))


@settings(max_examples=40)
@given(graphs(min_n=4, max_n=6, connected=True))
def test_adding_edges_does_not_decrease(g):
    """ak(g) <= ak(g + e) when both have perfect matchings and an answer."""
    r = anti_kekule_number(g)
    if r.kind is not AkKind.NUMBER:
        return
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                big = anti_kekule_number(g.add_edges([(u, v)]))
                assert big.kind is AkKind.NUMBER and big.value >= r.value
                return
