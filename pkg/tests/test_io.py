import random

import networkx as nx
import pytest
from hypothesis import given

from akgraph import generators as gen
from akgraph.exceptions import EdgeListError, Graph6Error, Graph6LongFormError
from akgraph.graph import Graph, labeled_graphs
from akgraph.io import encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from conftest import graphs


def _nx_graph6(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return nx.to_graph6_bytes(G, header=False).decode().strip()


@pytest.mark.parametrize(
    "line, n, edges",
    [
        ("@", 1, []),
        ("C~", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ("A?", 2, []),
    ],
)
def test_parse_fixtures(line, n, edges):
    g = parse_graph6(line)
    assert g == Graph(n, edges)


def test_encode_fixtures():
    assert encode_graph6(gen.complete_graph(1)) == "@"
    assert encode_graph6(gen.complete_graph(4)) == "C~"


def test_header_and_whitespace():
    assert parse_graph6(">>graph6<<C~\n") == gen.complete_graph(4)


@pytest.mark.parametrize(
    "line, exc",
    [
        ("", Graph6Error),
        ("C", Graph6Error),          # truncated
        ("C~~", Graph6Error),        # trailing data
        ("C\x01", Graph6Error),      # non-printable
        ("~?@c", Graph6LongFormError),
    ],
)
def test_parse_errors(line, exc):
    with pytest.raises(exc):
        parse_graph6(line)


def test_encode_rejects_large():
    with pytest.raises(Graph6LongFormError):
        encode_graph6(Graph(63))


@given(graphs(max_n=12))
def test_agrees_with_networkx(g):
    line = encode_graph6(g)
    assert line == _nx_graph6(g)
    G = nx.from_graph6_bytes(line.encode())
    assert sorted(tuple(sorted(e)) for e in G.edges()) == list(g.edges)


def test_round_trip_all_order_5():
    for g in labeled_graphs(5):
        assert parse_graph6(encode_graph6(g)) == g


def test_round_trip_random_up_to_62():
    rng = random.Random(2024)
    for _ in range(300):
        n = rng.randint(0, 62)
        p = rng.random()
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        assert parse_graph6(encode_graph6(g)) == g


class TestEdgeList:
    def test_examples(self):
        assert parse_edge_list("2 1 / 0 1") == gen.complete_graph(2)
        c4 = parse_edge_list("4 4 / 0 1 / 1 2 / 2 3 / 3 0")
        assert c4 == gen.cycle_graph(4)

    @pytest.mark.parametrize(
        "text",
        ["3 1 / 0 0", "3 2 / 0 1 / 1 0", "3 1 / 0 3", "3 2 / 0 1", "x y", ""],
    )
    def test_errors(self, text):
        with pytest.raises(EdgeListError):
            parse_edge_list(text)

    @given(graphs(max_n=10))
    def test_round_trip(self, g):
        assert parse_edge_list(format_edge_list(g)) == g
