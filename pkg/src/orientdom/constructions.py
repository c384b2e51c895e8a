"""Explicit orientations realizing known values and bounds, plus a registry of predictions.

Every builder returns the orientation together with a total dominating set
of it that the matching argument singles out.  Vertex numbering follows
:mod:`orientdom.families`.  Grid vertices are addressed as 1-based
``(row, column)`` pairs internally and mapped with ``_gv``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import InvalidFamilyParams, NoCycle, NoTheoremApplies
from .families import FamilySpec, complete_bipartite, grid, ladder, make_family
from .graph import Graph, Orientation, longest_induced_cycle, orientation_from_arcs

QUANTITIES = ("dom_t", "DOM_t", "gamma_t_of_witness")
RELATIONS = ("equals", "atMost", "atLeast")


@dataclass(frozen=True)
class PredictedQuantity:
    quantity: str
    relation: str
    bound: int
    claim: str = ""

    def holds(self, value: int) -> bool:
        if self.relation == "equals":
            return value == self.bound
        if self.relation == "atMost":
            return value <= self.bound
        return value >= self.bound

    def __str__(self) -> str:
        sym = {"equals": "=", "atMost": "<=", "atLeast": ">="}[self.relation]
        return f"{self.quantity} {sym} {self.bound}"


@dataclass(frozen=True)
class ConstructionResult:
    name: str
    orientation: Orientation
    candidate_set: frozenset[int]
    predicted: tuple[PredictedQuantity, ...] = ()
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def graph(self) -> Graph:
        return self.orientation.base


# ---------------------------------------------------------------------------
# Complete bipartite graphs


def _check_mn(m, n):
    if not (isinstance(m, int) and isinstance(n, int)) or not 2 <= m <= n:
        raise InvalidFamilyParams(f"need 2 <= m <= n, got m={m}, n={n}")


def bipartite_min_orientation(m: int, n: int) -> ConstructionResult:
    """A directed 4-cycle x1 y1 x2 y2 with every other vertex fed from it."""
    _check_mn(m, n)
    g = complete_bipartite(m, n)
    x = lambda i: i - 1
    y = lambda j: m + j - 1
    special = {(x(1), y(1)), (y(1), x(2)), (x(2), y(2)), (y(2), x(1))}
    special |= {(x(1), y(j)) for j in range(3, n + 1)}
    special |= {(y(1), x(i)) for i in range(3, m + 1)}
    fixed = {frozenset(a) for a in special}
    arcs = list(special) + [(x(i), y(j)) for i in range(1, m + 1) for j in range(1, n + 1) if frozenset((x(i), y(j))) not in fixed]
    o = orientation_from_arcs(g, arcs)
    s = frozenset({x(1), x(2), y(1), y(2)})
    pred = (PredictedQuantity("gamma_t_of_witness", "equals", 4), PredictedQuantity("dom_t", "equals", 4, "dom_t(K_{m,n}) = 4"))
    return ConstructionResult("bipartite-min", o, s, pred)


def bipartite_max_orientation(m: int, n: int) -> ConstructionResult:
    """Arcs y_i -> x_i for i <= m; every other edge points from X to Y."""
    _check_mn(m, n)
    g = complete_bipartite(m, n)
    arcs = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            xi, yj = i - 1, m + j - 1
            arcs.append((yj, xi) if i == j else (xi, yj))
    o = orientation_from_arcs(g, arcs)
    s = frozenset({0, 1} | {m + j - 1 for j in range(1, m + 1)})
    pred = (
        PredictedQuantity("gamma_t_of_witness", "equals", m + 2),
        PredictedQuantity("DOM_t", "equals", m + 2, "DOM_t(K_{m,n}) = m + 2 for m <= n"),
    )
    return ConstructionResult("bipartite-max", o, s, pred)


def bipartite_k_orientation(m: int, n: int, k: int) -> ConstructionResult:
    """An orientation of K_{m,n} with gamma_t exactly ``k``, for 4 <= k <= m + 2."""
    _check_mn(m, n)
    if not isinstance(k, int) or not 4 <= k <= m + 2:
        raise InvalidFamilyParams(f"k must lie in [4, {m + 2}], got {k}")
    if k == 4:
        base = bipartite_min_orientation(m, n)
    elif k == m + 2:
        base = bipartite_max_orientation(m, n)
    else:
        g = complete_bipartite(m, n)
        arcs = []
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                xi, yj = i - 1, m + j - 1
                into_x = (j == i and i <= k - 3) or (j == k - 2 and i >= k - 2)
                arcs.append((yj, xi) if into_x else (xi, yj))
        o = orientation_from_arcs(g, arcs)
        s = frozenset({0, 1} | {m + j - 1 for j in range(1, k - 1)})
        base = ConstructionResult("bipartite-k", o, s, ())
    pred = (PredictedQuantity("gamma_t_of_witness", "equals", k),)
    return ConstructionResult("bipartite-k", base.orientation, base.candidate_set, pred)


# ---------------------------------------------------------------------------
# Ladders K_2 box P_m: u_i -> i-1, v_i -> m+i-1


def _check_ladder(m):
    if not isinstance(m, int) or m < 3:
        raise InvalidFamilyParams(f"ladder constructions need m >= 3, got {m}")


def _orient_rest(g: Graph, arcs: list[tuple[int, int]]) -> Orientation:
    """Complete ``arcs`` by pointing every unlisted edge from lower to higher index."""
    done = {frozenset(a) for a in arcs}
    rest = [(u, v) for u, v in g.edges if frozenset((u, v)) not in done]
    return orientation_from_arcs(g, list(arcs) + rest)


def ladder_min_orientation(m: int) -> ConstructionResult:
    """Cyclic 4-blocks at rungs 2+4l, a directed tail along the u-path, edges leaving the blocks."""
    _check_ladder(m)
    g = ladder(m)
    u = lambda i: i - 1
    v = lambda i: m + i - 1
    k, o = divmod(m, 4)
    arcs: list[tuple[int, int]] = []
    a: set[int] = set()
    notes = ()
    if k == 0:
        # m = 3: the block sits on rungs 1-2 and feeds rung 3
        arcs += [(u(1), u(2)), (u(2), v(2)), (v(2), v(1)), (v(1), u(1)), (u(3), v(3))]
        a |= {u(1), u(2), v(1), v(2)}
        notes = ("m=3: block on rungs 1-2, rung 3 fed from it",)
    else:
        for ell in range(k):
            i = 2 + 4 * ell
            arcs += [(u(i), u(i + 1)), (u(i + 1), v(i + 1)), (v(i + 1), v(i)), (v(i), u(i))]
            a |= {u(i), u(i + 1), v(i), v(i + 1)}
        if o:
            tail = [u(i) for i in range(4 * k - 1, 4 * k + o + 1)]
            arcs += list(zip(tail, tail[1:]))
            a |= set(tail[1:])
    decided = {frozenset(x) for x in arcs}
    for p, q in g.edges:
        if frozenset((p, q)) in decided:
            continue
        if p in a and q not in a:
            arcs.append((p, q))
        elif q in a and p not in a:
            arcs.append((q, p))
    orient = _orient_rest(g, arcs)
    value = m if m % 4 == 0 else m + 1
    pred = (
        PredictedQuantity("gamma_t_of_witness", "equals", value),
        PredictedQuantity("dom_t", "equals", value, "dom_t(K_2 box P_m) = m if 4 | m, else m + 1"),
    )
    return ConstructionResult("ladder-min", orient, frozenset(a), pred, notes)


def ladder_max_orientation(m: int) -> ConstructionResult:
    """Outer cycle directed cyclically, inner rungs alternating by parity."""
    _check_ladder(m)
    g = ladder(m)
    u = lambda i: i - 1
    v = lambda i: m + i - 1
    arcs = [(u(i), u(i + 1)) for i in range(1, m)] + [(v(i + 1), v(i)) for i in range(1, m)]
    arcs += [(u(m), v(m)), (v(1), u(1))]
    arcs += [(u(i), v(i)) if i % 2 == 0 else (v(i), u(i)) for i in range(2, m)]
    o = orientation_from_arcs(g, arcs)
    s = {v(1), u(m)}
    for ell in range(1, m // 2 + 1):
        s |= {u(2 * ell - 1), v(2 * ell)}
    s |= {u(2 * k) for k in range(1, (m - 2) // 2 + 1)}
    if m % 2:
        s.add(u(m - 1))
    lo = 3 * m // 2 + 1
    pred = (
        PredictedQuantity("gamma_t_of_witness", "atLeast", lo),
        PredictedQuantity("DOM_t", "atLeast", lo, "DOM_t(K_2 box P_m) >= floor(3m/2) + 1"),
    )
    return ConstructionResult("ladder-max", o, frozenset(s), pred)


# ---------------------------------------------------------------------------
# Grids P_m box P_n, u_{i,j} -> (i-1)*n + (j-1)


def _check_grid(m, n):
    if not (isinstance(m, int) and isinstance(n, int)) or not 3 <= m <= n:
        raise InvalidFamilyParams(f"grid constructions need 3 <= m <= n, got m={m}, n={n}")


def _grid_min_arcs(m: int, n: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Arcs of the row-triple pattern on an m x n grid with 3 | m."""
    arcs = []
    for i in range(1, m + 1):
        r = i % 3
        # horizontal edges in row i
        for j in range(1, n):
            if r == 1:
                arcs.append(((i, j), (i, j + 1)))
            elif r == 2:
                arcs.append(((i, j), (i, j + 1)) if j >= 2 else ((i, 2), (i, 1)))
            else:
                arcs.append(((i, j), (i, j + 1)) if j <= n - 2 else ((i, n), (i, n - 1)))
        if i == m:
            continue
        # vertical edges between rows i and i+1
        for j in range(1, n + 1):
            if r == 1:
                arcs.append(((i + 1, j), (i, j)))
            elif r == 2:
                arcs.append(((i + 1, j), (i, j)) if j == 2 else ((i, j), (i + 1, j)))
            else:
                arcs.append(((i, j), (i + 1, j)))
    return arcs


def _grid_min_set(m: int, n: int) -> set[tuple[int, int]]:
    s = {(i, j) for i in range(1, m + 1) if i % 3 == 2 for j in range(1, n + 1)}
    s |= {(i, j) for i in range(1, m + 1) if i % 3 == 0 for j in (1, 2)}
    return s


def _to_grid(m, n, arcs, cells, name, pred, notes=()) -> ConstructionResult:
    g = grid(m, n)
    gv = lambda c: (c[0] - 1) * n + (c[1] - 1)
    o = orientation_from_arcs(g, [(gv(a), gv(b)) for a, b in arcs])
    return ConstructionResult(name, o, frozenset(gv(c) for c in cells), pred, notes)


def grid_min_upper(m: int, n: int) -> int:
    """Size of the grid-min candidate set for any residue of m mod 3."""
    rows = m + (-m) % 3
    return rows * n // 3 + 2 * rows // 3


def grid_min_orientation(m: int, n: int) -> ConstructionResult:
    """Row-triple orientation; for m not divisible by 3 built on a taller grid and trimmed."""
    _check_grid(m, n)
    r = m % 3
    notes = ()
    if r == 0:
        arcs, s = _grid_min_arcs(m, n), _grid_min_set(m, n)
    elif r == 2:
        # drop the first row of the (m+1)-row pattern
        big = m + 1
        arcs = [((a[0] - 1, a[1]), (b[0] - 1, b[1])) for a, b in _grid_min_arcs(big, n) if a[0] > 1 and b[0] > 1]
        s = {(i - 1, j) for i, j in _grid_min_set(big, n) if i > 1}
        notes = (f"first row of the {big} x {n} pattern removed",)
    else:
        # drop the first and last rows of the (m+2)-row pattern, then repair the
        # vertex left without in-arcs
        big = m + 2
        keep = lambda c: 1 < c[0] < big
        arcs = [(a, b) for a, b in _grid_min_arcs(big, n) if keep(a) and keep(b)]
        lo, hi = (big - 2, 2), (big - 1, 2)
        arcs = [(lo, hi) if (a, b) == (hi, lo) else (a, b) for a, b in arcs]
        s = {c for c in _grid_min_set(big, n) if keep(c)} | {(big - 2, 1), (big - 2, 2)}
        arcs = [((a[0] - 1, a[1]), (b[0] - 1, b[1])) for a, b in arcs]
        s = {(i - 1, j) for i, j in s}
        notes = (f"first and last rows of the {big} x {n} pattern removed; column-2 edge between the last two rows reversed",)
    size = grid_min_upper(m, n)
    # with two rows trimmed the set still dominates but need not be minimum
    pred = (
        PredictedQuantity("gamma_t_of_witness", "atMost" if r == 1 else "equals", size),
        PredictedQuantity("dom_t", "atMost", size, "dom_t(P_m box P_n) <= (m'n + 2m')/3 with m' = m rounded up to a multiple of 3"),
        PredictedQuantity("dom_t", "atLeast", math.ceil(m * n / 3), "dom_t(P_m box P_n) >= mn/3"),
    )
    return _to_grid(m, n, arcs, s, "grid-min", pred, notes)


def grid_max_orientation(m: int, n: int) -> ConstructionResult:
    """Rightward rows with a reversed first step, alternating column segments, downward border columns."""
    _check_grid(m, n)
    arcs = []
    for i in range(1, m + 1):
        for j in range(1, n):
            arcs.append(((1, 2), (1, 1)) if (i, j) == (1, 1) else ((i, j), (i, j + 1)))
    for j in range(1, n + 1):
        arcs.append(((2, 2), (1, 2)) if j == 2 else ((1, j), (2, j)))
    for i in range(2, m):
        for j in range(1, n + 1):
            if j in (1, n):
                arcs.append(((i, j), (i + 1, j)))
            elif i % 2 == 0:
                arcs.append(((i + 1, j), (i, j)))
            else:
                arcs.append(((i, j), (i + 1, j)))
    s = {(i, j) for i in range(1, m + 1, 2) for j in range(1, n + 1)}
    s |= {(i, 1) for i in range(2, m + 1, 2) if i != m}
    s.add((2, 2))
    if m % 2:
        s.discard((m, n))
    lo = math.ceil((m * n + m) / 2)
    pred = (
        PredictedQuantity("gamma_t_of_witness", "atLeast", lo),
        PredictedQuantity("DOM_t", "atLeast", lo, "DOM_t(P_m box P_n) >= (mn + m)/2"),
    )
    return _to_grid(m, n, arcs, s, "grid-max", pred)


# ---------------------------------------------------------------------------
# Longest induced cycle, everything else pointing away from it


def induced_cycle_orientation(g: Graph) -> ConstructionResult:
    if not g.in_class_c():
        raise NoCycle("graph must be connected and contain a cycle")
    length, cyc = longest_induced_cycle(g)
    dist = [-1] * g.n
    queue = deque(cyc)
    for c in cyc:
        dist[c] = 0
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    cyc_arcs = {(cyc[i], cyc[(i + 1) % length]) for i in range(length)}
    on_cycle = {frozenset(a) for a in cyc_arcs}
    arcs = list(cyc_arcs)
    for a, b in g.edges:
        if frozenset((a, b)) in on_cycle:
            continue
        if dist[a] != dist[b]:
            arcs.append((a, b) if dist[a] < dist[b] else (b, a))
        else:
            arcs.append((a, b))
    o = orientation_from_arcs(g, arcs)
    # cycle vertices plus one in-neighbor (from the previous layer) for each vertex two or more layers out
    s = set(cyc)
    for w in range(g.n):
        if dist[w] >= 2:
            s.add(min(p for p in g.neighbors(w) if dist[p] == dist[w] - 1))
    pred = (PredictedQuantity("gamma_t_of_witness", "atLeast", length, "gamma_t >= length of the oriented induced cycle"),)
    return ConstructionResult("induced-cycle", o, frozenset(s), pred, (f"cycle {list(cyc)}",))


# ---------------------------------------------------------------------------
# Registry

CONSTRUCTIONS = {
    "bipartite-min": (bipartite_min_orientation, 2),
    "bipartite-max": (bipartite_max_orientation, 2),
    "bipartite-k": (bipartite_k_orientation, 3),
    "ladder-min": (ladder_min_orientation, 1),
    "ladder-max": (ladder_max_orientation, 1),
    "grid-min": (grid_min_orientation, 2),
    "grid-max": (grid_max_orientation, 2),
}


def construct(name: str, params) -> ConstructionResult:
    if name not in CONSTRUCTIONS:
        raise InvalidFamilyParams(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}")
    fn, arity = CONSTRUCTIONS[name]
    params = tuple(params)
    if len(params) != arity:
        raise InvalidFamilyParams(f"{name} takes {arity} integer parameter(s)")
    return fn(*params)


def _leaves(g: Graph) -> int:
    return sum(1 for d in g.degrees if d == 1)


def predicted(spec: FamilySpec, quantity: str) -> tuple[PredictedQuantity, ...]:
    """Closed-form predictions for ``quantity`` on the family instance ``spec``."""
    if quantity not in ("dom_t", "DOM_t"):
        raise NoTheoremApplies(f"no registered prediction for quantity {quantity!r}")
    k, p = spec.kind, spec.params
    P = PredictedQuantity
    if k in ("cycle", "cycleWithLeaves", "familyF"):
        g = make_family(spec)
        val = g.n - _leaves(g)
        out = [P(quantity, "equals", val, "unicyclic: dom_t = DOM_t = n - #leaves")]
        if k == "familyF" and quantity == "dom_t":
            out.append(P(quantity, "equals", g.n - 1, "dom_t = n - 1 on cycle-with-pendant-path graphs"))
        return tuple(out)
    if k == "completeBipartite":
        a, b = sorted(p)
        if a >= 2:
            if quantity == "dom_t":
                return (P("dom_t", "equals", 4, "dom_t(K_{m,n}) = 4"),)
            return (P("DOM_t", "equals", a + 2, "DOM_t(K_{m,n}) = min(m, n) + 2"),)
    if k == "complete" and p[0] >= 3:
        n = p[0]
        if quantity == "dom_t":
            return (P("dom_t", "equals", 3, "dom_t(K_n) = 3"),)
        if n >= 4:
            lg = math.log2(n)
            lo = math.ceil(lg - 2 * math.log2(lg) - 1e-12)
            hi = math.floor(lg - math.log2(lg) + 4 + 1e-12)
            return (
                P("DOM_t", "atLeast", lo, "DOM_t(K_n) >= log2 n - 2 log2 log2 n"),
                P("DOM_t", "atMost", hi, "DOM_t(K_n) <= log2 n - log2 log2 n + 4"),
            )
    if k == "ladder" and p[0] >= 3:
        m = p[0]
        if quantity == "dom_t":
            return (P("dom_t", "equals", m if m % 4 == 0 else m + 1, "dom_t(K_2 box P_m) = m if 4 | m, else m + 1"),)
        return (
            P("DOM_t", "atLeast", 3 * m // 2 + 1, "DOM_t(K_2 box P_m) >= floor(3m/2) + 1"),
            P("DOM_t", "atMost", math.ceil(5 * 2 * m / 6), "DOM_t(K_2 box P_m) <= ceil(5 n / 6)"),
        )
    if k == "grid":
        a, b = sorted(p)
        if a >= 3:
            if quantity == "dom_t":
                return (
                    P("dom_t", "atLeast", math.ceil(a * b / 3), "dom_t(P_m box P_n) >= mn/3"),
                    P("dom_t", "atMost", grid_min_upper(a, b), "dom_t(P_m box P_n) <= (m'n + 2m')/3, m' = m rounded up to a multiple of 3"),
                )
            return (P("DOM_t", "atLeast", math.ceil((a * b + a) / 2), "DOM_t(P_m box P_n) >= (mn + m)/2"),)
    raise NoTheoremApplies(f"no registered prediction for {quantity} on {spec}")
