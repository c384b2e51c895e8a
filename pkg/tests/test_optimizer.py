from __future__ import annotations

from itertools import product

import pytest
from conftest import cyclic_graphs, graphs
from hypothesis import given, settings
from oracles import all_assignments, arcs_of, brute_DOM, brute_extrema, brute_gamma, brute_gamma_t, brute_valid

from orientdom.errors import BudgetExceeded, EmptyByTreeComponent, TooManyOrientations
from orientdom.families import complete, complete_bipartite, cycle, grid, ladder, path
from orientdom.graph import build_graph
from orientdom.optimizer import DOM, DOM_t, dom_t, enumerate_orientations, enumerate_valid_orientations, td_spectrum


def _first_dirs(g, value, total=True):
    for dirs in all_assignments(g):
        if total:
            if brute_valid(g, dirs) and brute_gamma_t(g.n, arcs_of(g, dirs)) == value:
                return dirs
        elif brute_gamma(g.n, arcs_of(g, dirs)) == value:
            return dirs


@settings(max_examples=60)
@given(cyclic_graphs(max_n=7, max_m=10))
def test_extrema_match_brute_force(g):
    lo, hi, vals = brute_extrema(g)
    r_lo, r_hi, spec = dom_t(g), DOM_t(g), td_spectrum(g)
    assert (r_lo.value, r_hi.value) == (lo, hi)
    assert set(spec.values) == vals and spec.exact
    assert r_lo.exact and r_hi.exact
    # the witness is the first optimal orientation in lexicographic bit order
    assert r_lo.witness.dirs == _first_dirs(g, lo)
    assert r_hi.witness.dirs == _first_dirs(g, hi)
    for val, w in spec.witnesses.items():
        assert w.dirs == _first_dirs(g, val)
        assert r_lo.cert.check(r_lo.witness)


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=6, max_m=9))
def test_DOM_matches_brute_force(g):
    r = DOM(g)
    assert r.value == brute_DOM(g)
    assert r.witness.dirs == _first_dirs(g, r.value, total=False)


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=7, max_m=10))
def test_streams_match_filtered_assignments(g):
    everything = [o.dirs for o in enumerate_orientations(g)]
    assert everything == list(product((0, 1), repeat=g.m))
    if not g.every_component_cyclic():
        with pytest.raises(EmptyByTreeComponent):
            list(enumerate_valid_orientations(g))
        return
    valid = [o.dirs for o in enumerate_valid_orientations(g)]
    assert valid == [d for d in everything if brute_valid(g, d)]


def test_disconnected_graph_combines_components():
    g = build_graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)])
    lo, hi, vals = brute_extrema(g)
    assert dom_t(g).value == lo == 7
    assert DOM_t(g).value == hi
    assert set(td_spectrum(g).values) == vals
    r = dom_t(g)
    assert r.witness.dirs == _first_dirs(g, lo)


def test_known_values():
    assert dom_t(complete_bipartite(3, 3)).value == 4
    assert DOM_t(complete_bipartite(3, 3)).value == 5
    assert dom_t(ladder(4)).value == 4
    assert dom_t(grid(3, 3)).value == 5
    assert DOM_t(cycle(6)).value == dom_t(cycle(6)).value == 6


def test_tree_and_edge_cap_errors():
    with pytest.raises(EmptyByTreeComponent):
        dom_t(path(5))
    with pytest.raises(TooManyOrientations):
        dom_t(complete(6), edge_cap=10)


def test_budget_exhaustion_reports_partial():
    with pytest.raises(BudgetExceeded) as exc:
        DOM_t(complete(7), node_budget=500)
    part = exc.value.partial
    assert part is None or (not part.exact and part.cert.check(part.witness))


def test_upper_bound_stops_at_known_value():
    r = DOM_t(complete_bipartite(4, 5), upper_bound=6)
    assert r.value == 6


def test_worker_count_does_not_change_results():
    g = complete_bipartite(3, 4)
    a, b = DOM_t(g, workers=1), DOM_t(g, workers=2)
    assert (a.value, a.witness, a.nodes, a.pruned_subtrees) == (b.value, b.witness, b.nodes, b.pruned_subtrees)
    s1, s2 = td_spectrum(g, workers=1), td_spectrum(g, workers=2)
    assert s1.values == s2.values and s1.witnesses == s2.witnesses
