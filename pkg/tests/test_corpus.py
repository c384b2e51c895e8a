from __future__ import annotations

import random

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st

from orientdom.corpus import (
    canonical_code,
    connected_graphs,
    exhaustive,
    family_sweep,
    graph6_file,
    in_family_f,
    is_cycle_with_leaves,
    is_isomorphic,
    is_unicyclic,
    parse_corpus,
    tournaments,
)
from orientdom.errors import InvalidFamilyParams
from orientdom.families import complete, cycle, cycle_with_leaves, family_f
from orientdom.graph import build_graph
from orientdom.graph6 import encode_graph6

# connected graphs on 1..7 vertices up to isomorphism
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


def test_connected_counts():
    assert [len(connected_graphs(n)) for n in range(1, 8)] == CONNECTED_COUNTS


def test_exhaustive_matches_networkx_atlas():
    ours = {canonical_code(g) for n in range(1, 8) for g in connected_graphs(n)}
    ref = set()
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            ref.add(canonical_code(build_graph(h.number_of_nodes(), h.edges())))
    assert ours == ref


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_code_is_a_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_code(g) == canonical_code(h)
    ref = nx.is_isomorphic(nx.Graph(list(g.edges)), nx.Graph(list(h.edges)))
    assert ref


@given(graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=6))
def test_is_isomorphic_matches_networkx(g, h):
    a, b = nx.Graph(), nx.Graph()
    a.add_nodes_from(range(g.n))
    a.add_edges_from(g.edges)
    b.add_nodes_from(range(h.n))
    b.add_edges_from(h.edges)
    assert is_isomorphic(g, h) == nx.is_isomorphic(a, b)


def test_structural_predicates():
    assert is_unicyclic(cycle(5)) and not is_unicyclic(complete(4))
    assert in_family_f(family_f(4, 2)) and not in_family_f(cycle(4))
    assert not in_family_f(cycle_with_leaves((1, 1, 0)))
    assert is_cycle_with_leaves(cycle_with_leaves((2, 0, 1, 0)))
    assert not is_cycle_with_leaves(family_f(3, 3))


def test_filters_and_cursor_indexes():
    c = exhaustive(5, in_c=True)
    items = list(c.items())
    assert len(items) == sum(1 for n in range(1, 6) for g in connected_graphs(n) if g.m >= n)
    later = list(c.items(start=items[5].index))
    assert later[0] == items[5]
    assert parse_corpus("exhaustive:4..5").describe() == "exhaustive:4..5"
    assert len(list(parse_corpus("exhaustive:4", girth_at_least=4).graphs())) == 6
    assert [g.m for g in parse_corpus("exhaustive:4", girth_at_least=4, in_c=True).graphs()] == [4]


def test_graph6_file_reports_bad_lines(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(">>graph6<<\n" + encode_graph6(cycle(4)) + "\nD!!\n" + encode_graph6(complete(4)) + "\n")
    items = list(graph6_file(str(p)).items())
    assert [i.error is None for i in items] == [True, False, True]
    assert items[1].label.startswith("line 3")


def test_family_sweep():
    c = family_sweep("ladder:3..5;grid:3,3..4")
    assert [str(f) for f in c.families] == ["ladder:3", "ladder:4", "ladder:5", "grid:3,3", "grid:3,4"]
    with pytest.raises(InvalidFamilyParams):
        family_sweep("ladder:5..3")
    with pytest.raises(InvalidFamilyParams):
        parse_corpus("bogus:1")


def test_tournaments_are_all_labelled_tournaments():
    ts = list(tournaments(4))
    assert len(ts) == 64 == len(set(ts))
    rng = random.Random(1)
    t = rng.choice(ts)
    assert sorted(tuple(sorted(a)) for a in t) == [(u, v) for u in range(4) for v in range(u + 1, 4)]
