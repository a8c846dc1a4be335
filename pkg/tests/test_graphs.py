import random
from itertools import combinations

import pytest

from sigdom.graphs import (
    Graph,
    GraphFormatError,
    clique_number,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    edges_between,
    generate_family,
    girth,
    is_bipartite,
    is_connected,
    is_regular,
    is_tree,
    max_degree,
    min_degree,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    stream_graph6,
    write_graph6,
)
from oracles import brute_clique


def test_graph_invariants():
    g = cycle_graph(5)
    assert g.n == 5 and g.m == 5
    assert sum(g.degrees()) == 2 * g.m
    assert g.has_edge(0, 4) and not g.has_edge(0, 2)
    assert list(g.neighbors(0)) == [1, 4]


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="range"):
        Graph(3, [(0, 3)])


def test_graph6_known_encodings():
    assert write_graph6(path_graph(2)) == "A_"
    assert write_graph6(complete_graph(4)) == "C~"
    assert write_graph6(Graph(1)) == "@"
    k2 = parse_graph6("A_")
    assert (k2.n, k2.m) == (2, 1)
    assert parse_graph6("C~") == complete_graph(4)
    c4 = parse_graph6("Cl")
    assert sorted(c4.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert parse_graph6(">>graph6<<A_") == k2


def test_graph6_roundtrip_families():
    for g in (
        complete_graph(7),
        cycle_graph(9),
        path_graph(6),
        complete_bipartite_graph(3, 4),
        star_graph(8),
        Graph(5),
    ):
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_roundtrip_random():
    rng = random.Random(42)
    for _ in range(200):
        n = rng.randint(1, 14)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.4]
        g = Graph(n, edges)
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_malformed_records():
    with pytest.raises(GraphFormatError, match="empty"):
        parse_graph6("   ")
    with pytest.raises(GraphFormatError, match="alphabet"):
        parse_graph6("A!")
    with pytest.raises(GraphFormatError, match="payload"):
        parse_graph6("C")  # n=4 needs one payload byte
    with pytest.raises(GraphFormatError, match="payload"):
        parse_graph6("A__")
    with pytest.raises(GraphFormatError, match="padding"):
        parse_graph6("A~")  # n=2 uses 1 bit; the other 5 must be zero
    with pytest.raises(GraphFormatError, match="long-form"):
        parse_graph6("~??")
    with pytest.raises(GraphFormatError, match="62"):
        write_graph6(Graph(63))


def test_stream_graph6_reports_line_numbers():
    lines = ["A_", "", "C~", "A!"]
    it = stream_graph6(lines, source="corpus.g6")
    assert next(it).n == 2
    assert next(it).n == 4
    with pytest.raises(GraphFormatError, match=r"corpus\.g6:4"):
        next(it)


def test_parse_edge_list():
    assert parse_edge_list("2\n0 1") == path_graph(2)
    assert parse_edge_list("4\n0 1\n1 2\n2 3\n3 0") == cycle_graph(4)
    with pytest.raises(GraphFormatError, match="self-loop"):
        parse_edge_list("3\n0 0")
    with pytest.raises(GraphFormatError, match="duplicate"):
        parse_edge_list("3\n0 1 1 0")
    with pytest.raises(GraphFormatError, match="range"):
        parse_edge_list("3\n0 3")
    with pytest.raises(GraphFormatError, match="pairs"):
        parse_edge_list("3\n0 1 2")
    with pytest.raises(GraphFormatError, match="integer"):
        parse_edge_list("x")


def test_generate_family():
    k4 = generate_family("complete", 4)
    assert (k4.n, k4.m) == (4, 6)
    c5 = generate_family("cycle", 5)
    assert (c5.n, c5.m) == (5, 5) and is_regular(c5) == 2
    k23 = generate_family("complete_bipartite", 2, 3)
    assert (k23.n, k23.m) == (5, 6)
    assert generate_family("bipartite", 2, 3) == k23
    assert generate_family("star", 5) == star_graph(5)
    assert generate_family("path", 4) == path_graph(4)
    with pytest.raises(ValueError):
        generate_family("complete", 1)
    with pytest.raises(ValueError):
        generate_family("cycle", 2)
    with pytest.raises(ValueError):
        generate_family("bipartite", 0, 3)
    with pytest.raises(ValueError):
        generate_family("mystery", 3)
    with pytest.raises(ValueError):
        generate_family("cycle", 3, 4)


def test_family_canonical_numbering():
    c4 = cycle_graph(4)
    assert sorted(c4.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    k23 = complete_bipartite_graph(2, 3)
    assert all(k23.has_edge(i, j) for i in (0, 1) for j in (2, 3, 4))
    assert star_graph(4).degree(0) == 3


def test_degree_queries():
    c6 = cycle_graph(6)
    assert (min_degree(c6), max_degree(c6), is_regular(c6)) == (2, 2, 2)
    k23 = complete_bipartite_graph(2, 3)
    assert (min_degree(k23), max_degree(k23)) == (2, 3)
    assert is_regular(k23) is None
    s5 = star_graph(5)
    assert (min_degree(s5), max_degree(s5)) == (1, 4)


def test_edges_between():
    c4 = cycle_graph(4)
    assert edges_between(c4, {0, 1}, {2, 3}) == 2
    assert edges_between(c4, set(), {2, 3}) == 0
    assert edges_between(complete_graph(4), {0}, {1, 2, 3}) == 3
    with pytest.raises(ValueError, match="overlap"):
        edges_between(c4, {0, 1}, {1, 2})
    with pytest.raises(ValueError, match="range"):
        edges_between(c4, {0, 9}, {1})


def test_edges_between_cut_identity():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 9)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph(n, edges)
        a = {v for v in range(n) if rng.random() < 0.5}
        b = set(range(n)) - a
        inside = sum(1 for u, v in g.edges() if u in a and v in a)
        assert edges_between(g, a, b) == sum(g.degree(v) for v in a) - 2 * inside


def test_connectivity_and_trees():
    assert is_connected(path_graph(4)) and is_tree(path_graph(4))
    assert is_connected(cycle_graph(4)) and not is_tree(cycle_graph(4))
    two_edges = Graph(4, [(0, 1), (2, 3)])
    assert not is_connected(two_edges) and not is_tree(two_edges)
    assert is_connected(Graph(1))


def test_bipartite_and_girth():
    assert girth(cycle_graph(5)) == 5 and not is_bipartite(cycle_graph(5))
    assert girth(cycle_graph(6)) == 6 and is_bipartite(cycle_graph(6))
    assert girth(complete_graph(4)) == 3
    assert girth(path_graph(5)) is None
    assert girth(complete_bipartite_graph(3, 3)) == 4
    assert is_bipartite(star_graph(7))


def test_clique_number_examples():
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(complete_bipartite_graph(3, 3)) == 2
    assert clique_number(Graph(3)) == 1


def test_clique_number_against_brute_force():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 8)
        edges = [e for e in combinations(range(n), 2) if rng.random() < rng.random()]
        g = Graph(n, edges)
        assert clique_number(g) == brute_clique(g)


def test_clique_number_on_corpus(connected_upto8):
    # every connected graph through n=7, plus a deterministic slice of n=8
    for i, g in enumerate(connected_upto8):
        if g.n == 8 and i % 8:
            continue
        assert clique_number(g) == brute_clique(g)
