"""Sanity of the bundled corpora against the published censuses."""

from collections import Counter

from sigdom.graphs import is_connected, is_regular, parse_graph6, write_graph6

CONNECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}
QUARTIC_COUNTS = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16}


def test_connected_corpus_counts(connected_upto8):
    by_order = Counter(g.n for g in connected_upto8)
    assert dict(by_order) == CONNECTED_COUNTS
    assert len(connected_upto8) == 12112


def test_connected_corpus_graphs_are_connected(connected_upto8):
    assert all(is_connected(g) for g in connected_upto8)


def test_connected_corpus_has_no_duplicates(connected_upto8):
    seen = {write_graph6(g) for g in connected_upto8}
    assert len(seen) == len(connected_upto8)


def test_cubic_corpus(cubic_upto10):
    by_order = Counter(g.n for g in cubic_upto10)
    assert dict(by_order) == CUBIC_COUNTS
    assert all(is_regular(g) == 3 and is_connected(g) for g in cubic_upto10)


def test_quartic_corpus(quartic_5to9):
    by_order = Counter(g.n for g in quartic_5to9)
    assert dict(by_order) == QUARTIC_COUNTS
    assert all(is_regular(g) == 4 and is_connected(g) for g in quartic_5to9)


def test_corpus_roundtrip_and_handshake(connected_upto8):
    for g in connected_upto8:
        assert parse_graph6(write_graph6(g)) == g
        assert sum(g.degrees()) == 2 * g.m
