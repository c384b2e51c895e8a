from __future__ import annotations

from itertools import combinations

import pytest
from conftest import graphs, orientations
from hypothesis import given
from oracles import brute_gamma, brute_gamma_t

from orientdom.errors import NotInSet, NotValidOrientation
from orientdom.families import complete, cycle
from orientdom.graph import is_valid, orientation_from_arcs
from orientdom.solver import (
    cover_number,
    gamma,
    gamma_t,
    gamma_t_value,
    is_dominating,
    is_total_dominating,
    private_neighbors,
    undirected_total_domination,
)


def _directed_cycle(n):
    return orientation_from_arcs(cycle(n), [(i, (i + 1) % n) for i in range(n)])


def _lex_first_min(o, k, total=True):
    for combo in combinations(range(o.n), k):
        if (is_total_dominating if total else is_dominating)(o, combo):
            return combo


def test_directed_cycle_needs_every_vertex():
    for n in range(3, 9):
        o = _directed_cycle(n)
        assert gamma_t(o).value == n
        assert gamma(o).value == (n + 1) // 2


def test_invalid_orientation_rejected():
    o = orientation_from_arcs(cycle(3), [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(NotValidOrientation) as exc:
        gamma_t(o)
    assert exc.value.vertex == 0


def test_private_neighbors():
    o = orientation_from_arcs(cycle(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert private_neighbors(o, [0, 1, 2, 3], 1) == {2}
    with pytest.raises(NotInSet):
        private_neighbors(o, [0, 1], 3)


def test_cover_number_limit_semantics():
    o = _directed_cycle(7)
    exact = cover_number(o.out_masks, o.in_masks, 7)[0]
    assert exact == 7
    assert cover_number(o.out_masks, o.in_masks, 7, limit=7)[0] == 7
    assert cover_number(o.out_masks, o.in_masks, 7, limit=4)[0] > 4


def test_undirected_total_domination():
    assert undirected_total_domination(complete(5)) == 2
    assert undirected_total_domination(cycle(6)) == 4


@given(orientations(graphs(min_n=2, max_n=8)))
def test_gamma_t_matches_brute_force(o):
    ref = brute_gamma_t(o.n, o.arcs)
    if not is_valid(o):
        assert ref is None
        with pytest.raises(NotValidOrientation):
            gamma_t(o)
        return
    sol = gamma_t(o)
    assert sol.value == ref == gamma_t_value(o)
    assert sol.cert.check(o) and len(sol.cert.set) == sol.value
    assert tuple(sol.cert.sorted_set()) == _lex_first_min(o, sol.value)


@given(orientations(graphs(min_n=1, max_n=8)))
def test_gamma_matches_brute_force(o):
    sol = gamma(o)
    assert sol.value == brute_gamma(o.n, o.arcs)
    assert sol.cert.check(o) and is_dominating(o, sol.cert.set)
    assert tuple(sol.cert.sorted_set()) == _lex_first_min(o, sol.value, total=False)
