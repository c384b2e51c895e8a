from __future__ import annotations

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given
from oracles import encode_graph6_reference

from orientdom.errors import ParseError
from orientdom.graph import build_graph
from orientdom.graph6 import encode_graph6, parse_graph6


@given(graphs(min_n=0, max_n=12))
def test_round_trip_and_reference_encoder(g):
    s = encode_graph6(g)
    assert s == encode_graph6_reference(g.n, g.edges)
    assert parse_graph6(s) == g


def test_known_strings_match_networkx():
    for ref in (nx.petersen_graph(), nx.complete_graph(5), nx.path_graph(70)):
        g = build_graph(ref.number_of_nodes(), ref.edges())
        assert encode_graph6(g) == nx.to_graph6_bytes(ref, header=False).decode().strip()


def test_header_and_large_n():
    g = build_graph(100, [(0, 99)])
    assert parse_graph6(">>graph6<<" + encode_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "Da", "D~~~~", "~??", "D\x7f?", "~~??????"])
def test_malformed_strings_raise(bad):
    with pytest.raises(ParseError):
        parse_graph6(bad)
