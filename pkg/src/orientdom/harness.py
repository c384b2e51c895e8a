"""Registry of machine-checkable claims and a corpus scanner.

Each check either runs on any graph (``per_graph``) or on a fixed list of
instances it knows about (``fixed``).  A fixed check given a graph runs only
if the graph is isomorphic to one of its instances.

Outcomes are ``verified``, ``refuted`` (always with a counterexample bundle
that :func:`replay` can feed back through the check) or ``skipped`` (with a
machine-readable reason).
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

from . import optimizer as opt
from .constructions import grid_max_orientation, grid_min_orientation, grid_min_upper, ladder_max_orientation, ladder_min_orientation
from .corpus import Corpus, canonical_code, in_family_f, is_cycle_with_leaves, is_unicyclic, tournaments
from .errors import BudgetExceeded, EmptyByTreeComponent, TooManyOrientations, UnknownCheck
from .families import complete, complete_bipartite, diamond, grid, ladder, make_family, parse_family
from .graph import Graph, Orientation, build_graph, girth, longest_induced_cycle, orientation_from_arcs
from .graph6 import encode_graph6, parse_graph6
from .solver import gamma_t, gamma_value, is_total_dominating

# dom_t/DOM_t/spectrum are only attempted up to this many edges by default
DEFAULT_EDGE_LIMIT = 18
# checks that walk every valid orientation do so only up to this many edges
STREAM_EDGE_LIMIT = 10


@dataclass(frozen=True)
class Budget:
    node_budget: int = opt.DEFAULT_NODE_BUDGET
    edge_limit: int = DEFAULT_EDGE_LIMIT
    stream_edge_limit: int = STREAM_EDGE_LIMIT
    subgraph_size: int = 8  # largest vertex set for the grid neighbourhood check


@dataclass
class CheckOutcome:
    check_id: str
    target: str
    status: str  # verified | refuted | skipped
    detail: str = ""
    counterexample: dict | None = None
    reason: str | None = None
    values: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "checkId": self.check_id,
                "target": self.target,
                "status": self.status,
                "detail": self.detail,
                "reason": self.reason,
                "values": self.values,
                "counterexample": self.counterexample,
            },
            sort_keys=True,
        )


class _Skip(Exception):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(detail or reason)
        self.reason = reason
        self.detail = detail or reason


class _Refute(Exception):
    def __init__(self, detail: str, bundle: dict):
        super().__init__(detail)
        self.detail = detail
        self.bundle = bundle


def bundle(g: Graph, o: Orientation | None = None, s: Iterable[int] | None = None, **extra) -> dict:
    out = {"graph6": encode_graph6(g), "n": g.n, "edges": [list(e) for e in g.edges]}
    if o is not None:
        out["dirBits"] = o.dir_string
    if s is not None:
        out["set"] = sorted(s)
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# Cached exact quantities


@lru_cache(maxsize=4096)
def _quantity(n: int, edges: tuple, quantity: str, node_budget: int):
    g = Graph(n, edges)
    if quantity == "spectrum":
        return opt.td_spectrum(g, edge_cap=None, node_budget=node_budget)
    fn = {"dom_t": opt.dom_t, "DOM_t": opt.DOM_t, "DOM": opt.DOM}[quantity]
    return fn(g, edge_cap=None, node_budget=node_budget)


def quantity(g: Graph, name: str, budget: Budget):
    """Exact extremum report (or spectrum); raises _Skip when out of reach."""
    if g.m > budget.edge_limit:
        raise _Skip("edgeLimit", f"{g.m} edges exceed the limit of {budget.edge_limit}")
    try:
        return _quantity(g.n, g.edges, name, budget.node_budget)
    except BudgetExceeded:
        raise _Skip("budget", f"{name} exceeded the node budget") from None
    except TooManyOrientations:
        raise _Skip("edgeLimit", f"{name} over the edge cap") from None


def value(g: Graph, name: str, budget: Budget) -> int:
    return quantity(g, name, budget).value


def _need_c(g: Graph):
    if not g.in_class_c():
        raise _Skip("precondition", "graph is not connected with a cycle")


def _stream(g: Graph, budget: Budget):
    if g.m > budget.stream_edge_limit:
        raise _Skip("edgeLimit", f"{g.m} edges exceed the orientation-stream limit of {budget.stream_edge_limit}")
    return opt.enumerate_valid_orientations(g, edge_cap=None)


def _removals(g: Graph) -> Iterator[tuple[int, Graph]]:
    """Vertices whose deletion leaves a connected graph with a cycle."""
    for v in range(g.n):
        h = g.remove_vertex(v)
        if h.in_class_c():
            yield v, h


# ---------------------------------------------------------------------------
# Per-graph checks


def _components_have_cycles(g: Graph, s) -> bool:
    sub = g.induced_subgraph(sorted(s))
    for comp in sub.components:
        k = sum(1 for a, b in sub.edges if a in comp)
        if k < len(comp):
            return False
    return True


def check_td_cycle(g: Graph, budget: Budget) -> str:
    _need_c(g)
    try:
        orientations = list(_stream(g, budget))
        how = "every valid orientation"
    except _Skip:
        orientations = [quantity(g, "dom_t", budget).witness, quantity(g, "DOM_t", budget).witness]
        how = "the dom_t and DOM_t witnesses"
    for o in orientations:
        s = gamma_t(o).cert.set
        if not _components_have_cycles(g, s):
            raise _Refute("a component of G[S] is acyclic", bundle(g, o, s))
    return f"minimum TD-set of {how} ({len(orientations)}) induces only cyclic components"


def check_girth_bounds(g: Graph, budget: Budget) -> str:
    _need_c(g)
    gi = int(girth(g))
    lic, cyc = longest_induced_cycle(g)
    lo, hi = quantity(g, "dom_t", budget), quantity(g, "DOM_t", budget)
    if lo.value < gi:
        raise _Refute(f"dom_t={lo.value} < girth={gi}", bundle(g, lo.witness, lo.cert.set))
    if hi.value < lic:
        raise _Refute(f"DOM_t={hi.value} < longest induced cycle={lic}", bundle(g, hi.witness, hi.cert.set, cycle=list(cyc)))
    return f"dom_t={lo.value} >= girth={gi}; DOM_t={hi.value} >= longest induced cycle={lic}"


def check_unicyclic(g: Graph, budget: Budget) -> str:
    if not is_unicyclic(g):
        raise _Skip("precondition", "graph is not unicyclic")
    leaves = {v for v in range(g.n) if g.degrees[v] == 1}
    want = g.n - len(leaves)
    lo, hi = value(g, "dom_t", budget), value(g, "DOM_t", budget)
    if not lo == hi == want:
        raise _Refute(f"dom_t={lo}, DOM_t={hi}, n-|L|={want}", bundle(g))
    core = set(range(g.n)) - leaves
    count = 0
    for o in opt.enumerate_valid_orientations(g, edge_cap=None):
        count += 1
        if not is_total_dominating(o, core):
            raise _Refute("V-L is not a TD-set", bundle(g, o, core))
    return f"dom_t = DOM_t = {want}; V-L dominates all {count} valid orientations"


def check_girth7(g: Graph, budget: Budget) -> str:
    _need_c(g)
    gi = girth(g)
    if gi < 7:
        raise _Skip("precondition", f"girth {gi} < 7")
    lo, hi = value(g, "dom_t", budget), value(g, "DOM_t", budget)
    s1 = lo == gi or hi == gi
    s2 = lo == hi == gi
    s3 = is_cycle_with_leaves(g)
    if not s1 == s2 == s3:
        raise _Refute(f"statements disagree: (i)={s1} (ii)={s2} (iii)={s3}", bundle(g))
    return f"all three statements {'hold' if s1 else 'fail'} (girth {int(gi)}, dom_t={lo}, DOM_t={hi})"


def check_induced_monotone(g: Graph, budget: Budget) -> str:
    _need_c(g)
    top = value(g, "DOM_t", budget)
    k = 0
    for v, h in _removals(g):
        sub = value(h, "DOM_t", budget)
        k += 1
        if sub > top:
            raise _Refute(f"DOM_t(G-{v})={sub} > DOM_t(G)={top}", bundle(g, vertex=v))
    return f"DOM_t(G-v) <= DOM_t(G)={top} for {k} vertex-deleted subgraphs"


def check_spanning_monotone(g: Graph, budget: Budget) -> str:
    _need_c(g)
    base = value(g, "dom_t", budget)
    k = 0
    for e in g.edges:
        h = g.spanning_subgraph([f for f in g.edges if f != e])
        if not h.in_class_c():
            continue
        k += 1
        sub = value(h, "dom_t", budget)
        if base > sub:
            raise _Refute(f"dom_t(G)={base} > dom_t(G-{e})={sub}", bundle(g, edge=list(e)))
    return f"dom_t(G)={base} <= dom_t(G-e) for {k} spanning subgraphs"


def check_remove_vertex_domt(g: Graph, budget: Budget) -> str:
    _need_c(g)
    base = value(g, "dom_t", budget)
    k = 0
    for v, h in _removals(g):
        k += 1
        sub = value(h, "dom_t", budget)
        if base > sub + 1:
            raise _Refute(f"dom_t(G)={base} > dom_t(G-{v})+1={sub + 1}", bundle(g, vertex=v))
    return f"dom_t(G)={base} <= dom_t(G-v)+1 for {k} vertices"


def check_remove_vertex_DOMt_exists(g: Graph, budget: Budget) -> str:
    _need_c(g)
    if all(d == 2 for d in g.degrees):
        raise _Skip("precondition", "graph is a cycle")
    top = value(g, "DOM_t", budget)
    tried = []
    for v in range(g.n):
        h = g.remove_vertex(v)
        if h.n == 0 or not h.every_component_cyclic():
            continue
        sub = value(h, "DOM_t", budget)
        tried.append((v, sub))
        if top <= sub + 1:
            return f"v={v}: DOM_t(G)={top} <= DOM_t(G-v)+1={sub + 1}"
    raise _Refute(f"no vertex works; DOM_t(G)={top}, tried {tried}", bundle(g))


def check_DOM_vs_DOMt(g: Graph, budget: Budget) -> str:
    _need_c(g)
    dom = value(g, "DOM", budget)
    best, where = -1, None
    for o in _stream(g, budget):
        val = gamma_value(o)
        if val > best:
            best, where = val, o
    if best < dom:
        raise _Skip("precondition", f"no valid orientation attains DOM={dom} (best valid {best})")
    top = value(g, "DOM_t", budget)
    if dom > top:
        raise _Refute(f"DOM={dom} > DOM_t={top}", bundle(g, where))
    return f"DOM={dom} attained by a valid orientation; DOM_t={top}"


def _k23() -> Graph:
    return complete_bipartite(2, 3)


def _extreme_small(g: Graph) -> str | None:
    key = canonical_code(g)
    for name, h in (("K4", complete(4)), ("K2,3", _k23()), ("K4-e", diamond())):
        if key == canonical_code(h):
            return name
    return None


def _premise_n_minus_1(g: Graph, budget: Budget) -> int:
    _need_c(g)
    lo = value(g, "dom_t", budget)
    if lo != g.n - 1:
        raise _Skip("precondition", f"dom_t={lo} != n-1={g.n - 1}")
    return lo


def check_max_degree_3(g: Graph, budget: Budget) -> str:
    _premise_n_minus_1(g, budget)
    if max(g.degrees) > 3:
        raise _Refute(f"dom_t=n-1 but max degree {max(g.degrees)}", bundle(g))
    return "dom_t = n-1 and max degree <= 3"


def check_deg3_clique(g: Graph, budget: Budget) -> str:
    _premise_n_minus_1(g, budget)
    if _extreme_small(g) == "K2,3":
        return "graph is K2,3"
    d3 = [v for v in range(g.n) if g.degrees[v] == 3]
    for a, b in combinations(d3, 2):
        if not g.has_edge(a, b):
            raise _Refute(f"degree-3 vertices {a},{b} are not adjacent", bundle(g))
    return f"{len(d3)} degree-3 vertices, pairwise adjacent"


def check_one_deg3(g: Graph, budget: Budget) -> str:
    _premise_n_minus_1(g, budget)
    small = _extreme_small(g)
    if small:
        return f"graph is {small}"
    d3 = sum(1 for d in g.degrees if d == 3)
    if d3 > 1:
        raise _Refute(f"{d3} vertices of degree 3", bundle(g))
    return f"{d3} vertex of degree 3"


def check_extreme(g: Graph, budget: Budget) -> str:
    _need_c(g)
    lo = value(g, "dom_t", budget)
    member = in_family_f(g) or _extreme_small(g) is not None
    if (lo == g.n - 1) != member:
        raise _Refute(f"dom_t={lo}, n-1={g.n - 1}, listed={member}", bundle(g))
    return f"dom_t={lo}; {'in' if member else 'not in'} the listed family, as predicted"


def check_spectrum(g: Graph, budget: Budget) -> str:
    _need_c(g)
    spec = quantity(g, "spectrum", budget)
    if not spec.contiguous:
        missing = sorted(set(range(spec.min, spec.max + 1)) - set(spec.values))
        ws = {str(k): w.dir_string for k, w in spec.witnesses.items()}
        raise _Refute(f"spectrum {list(spec.values)} skips {missing}", bundle(g, witnesses=ws))
    return f"spectrum {spec.min}..{spec.max} is contiguous"


def check_conj_remove_vertex(g: Graph, budget: Budget) -> str:
    _need_c(g)
    top = value(g, "DOM_t", budget)
    k = 0
    for v, h in _removals(g):
        k += 1
        sub = value(h, "DOM_t", budget)
        if top > sub + 1:
            rep = quantity(g, "DOM_t", budget)
            raise _Refute(f"DOM_t(G)={top} > DOM_t(G-{v})+1={sub + 1}", bundle(g, rep.witness, rep.cert.set, vertex=v))
    return f"DOM_t(G)={top} <= DOM_t(G-v)+1 for {k} vertices"


# ---------------------------------------------------------------------------
# Fixed-instance checks; each returns a list of (label, graph, runner)


def _five_vertex_example():
    # x y z u v = 0 1 2 3 4
    g = build_graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)])
    h = g.spanning_subgraph([e for e in g.edges if e != (3, 4)])
    return g, h


def _run_spanning_counterexample(g: Graph, budget: Budget) -> str:
    _, h = _five_vertex_example()
    d = orientation_from_arcs(g, [(0, 1), (1, 2), (2, 0), (1, 3), (4, 2), (3, 4)])
    gd = gamma_t(d).value
    top_g, top_h = value(g, "DOM_t", budget), value(h, "DOM_t", budget)
    if not (gd >= 4 and top_g >= 4 and top_h == 3):
        raise _Refute(f"gamma_t(D)={gd}, DOM_t(G)={top_g}, DOM_t(G-uv)={top_h}", bundle(g, d))
    return f"gamma_t(D)={gd}; DOM_t(G)={top_g} > DOM_t(G-uv)={top_h}"


def _kn_bounds(n: int) -> tuple[float, float]:
    lg = math.log2(n)
    return lg - 2 * math.log2(lg), lg - math.log2(lg) + 4


def _run_kn_bounds(g: Graph, budget: Budget) -> str:
    n = g.n
    lo, hi = _kn_bounds(n)
    top = value(g, "DOM_t", budget)
    if not lo <= top <= hi:
        raise _Refute(f"DOM_t(K{n})={top} outside [{lo:.3f}, {hi:.3f}]", bundle(g))
    return f"DOM_t(K{n})={top} in [{lo:.3f}, {hi:.3f}]"


def _run_kn_sandwich(g: Graph, budget: Budget) -> str:
    n = g.n
    a, b = value(complete(n - 1), "DOM_t", budget), value(g, "DOM_t", budget)
    if b not in (a, a + 1):
        raise _Refute(f"DOM_t(K{n})={b} not in {{{a}, {a + 1}}}", bundle(g))
    return f"DOM_t(K{n - 1})={a}, DOM_t(K{n})={b}"


def _run_tournaments(g: Graph, budget: Budget) -> str:
    n = g.n
    bound = math.log2(n) - math.log2(math.log2(n)) + 2
    worst = 0
    for arcs in tournaments(n):
        o = orientation_from_arcs(g, arcs)
        val = gamma_value(o)
        if val > worst:
            worst = val
        if val > bound:
            raise _Refute(f"gamma(T)={val} > {bound:.3f}", bundle(g, o))
    return f"max gamma over all {2 ** g.m} tournaments on {n} vertices is {worst} <= {bound:.3f}"


def _run_bipartite(g: Graph, budget: Budget) -> str:
    m = min(g.degrees)  # K_{m,n} with m <= n: vertices in the larger side have degree m
    lo, hi = value(g, "dom_t", budget), value(g, "DOM_t", budget)
    spec = quantity(g, "spectrum", budget)
    if lo != 4 or hi != m + 2 or set(spec.values) != set(range(4, m + 3)):
        raise _Refute(f"dom_t={lo}, DOM_t={hi}, spectrum={list(spec.values)}", bundle(g))
    return f"dom_t=4, DOM_t={hi}, spectrum 4..{m + 2}"


def _run_k2p3(g: Graph, budget: Budget) -> str:
    valid = 0
    for o in opt.enumerate_orientations(g, edge_cap=None):
        if not all(o.in_masks):
            continue
        valid += 1
        if max(o.out_degree(v) for v in range(g.n)) < 2:
            raise _Refute("valid orientation with all out-degrees <= 1", bundle(g, o))
    return f"all {valid} valid orientations (of {2 ** g.m}) have a vertex of out-degree >= 2"


def _connected_sets(g: Graph, limit: int) -> Iterator[int]:
    """Every connected vertex set (as a mask) of size <= limit, each exactly once."""
    for root in range(g.n):
        yield from _esu(root, g.adj, ~((1 << root) - 1), limit)


def _esu(root, adj, allowed, limit):
    """Connected sets containing ``root`` as their smallest vertex."""
    def rec(cur, ext, blocked):
        yield cur
        if cur.bit_count() == limit:
            return
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            blocked |= low
            yield from rec(cur | low, (ext | (adj[w] & allowed)) & ~cur & ~blocked & ~low, blocked)
    start = 1 << root
    yield from rec(start, adj[root] & allowed, start)


def _run_grid_neighbourhood(g: Graph, budget: Budget) -> str:
    adj = g.adj
    count = 0
    for x in _connected_sets(g, budget.subgraph_size):
        sub = g.induced_subgraph([v for v in range(g.n) if x >> v & 1])
        if sub.m < sub.n:  # connected and acyclic
            continue
        count += 1
        closed = x
        y = x
        while y:
            low = y & -y
            closed |= adj[low.bit_length() - 1]
            y ^= low
        if closed.bit_count() > 3 * x.bit_count():
            raise _Refute(f"|N[X]|={closed.bit_count()} > 3|X|", bundle(g, None, [v for v in range(g.n) if x >> v & 1]))
    return f"{count} connected cyclic vertex sets of size <= {budget.subgraph_size} satisfy |N[X]| <= 3|X|"


def _grid_dims(g: Graph) -> tuple[int, int]:
    for m in range(1, g.n + 1):
        if g.n % m == 0:
            n = g.n // m
            if m <= n and canonical_code(grid(m, n)) == canonical_code(g):
                return m, n
    raise _Skip("precondition", "not a grid")


def _run_grid_bounds(g: Graph, budget: Budget) -> str:
    m, n = _grid_dims(g)
    lo = value(g, "dom_t", budget)
    a, b = math.ceil(m * n / 3), grid_min_upper(m, n)
    if not a <= lo <= b:
        raise _Refute(f"dom_t={lo} outside [{a}, {b}]", bundle(g))
    top = value(g, "DOM_t", budget)
    want = math.ceil((m * n + m) / 2)
    if top < want:
        raise _Refute(f"DOM_t={top} < {want}", bundle(g))
    return f"P{m}xP{n}: {a} <= dom_t={lo} <= {b}; DOM_t={top} >= {want}"


def _run_grid_constructions(g: Graph, budget: Budget) -> str:
    checked = 0
    for m in range(3, 7):
        for n in range(m, 9):
            for build in (grid_min_orientation, grid_max_orientation):
                r = build(m, n)
                o = r.orientation
                if not all(o.in_masks) or not is_total_dominating(o, r.candidate_set):
                    raise _Refute(f"{r.name}({m},{n}) candidate set does not dominate", bundle(r.graph, o, r.candidate_set))
                val = gamma_t(o).value
                for p in r.predicted:
                    if p.quantity == "gamma_t_of_witness" and not p.holds(val):
                        raise _Refute(f"{r.name}({m},{n}): gamma_t={val} violates {p}", bundle(r.graph, o, r.candidate_set))
                checked += 1
    return f"{checked} grid constructions up to 6x8 verified"


def _run_ladder_domt(g: Graph, budget: Budget) -> str:
    m = g.n // 2
    lo = value(g, "dom_t", budget)
    want = m if m % 4 == 0 else m + 1
    r = ladder_min_orientation(m)
    wit = gamma_t(r.orientation).value
    if lo != want or wit != want:
        raise _Refute(f"dom_t={lo}, construction gamma_t={wit}, predicted {want}", bundle(g, r.orientation, r.candidate_set))
    return f"dom_t(K2xP{m})={lo}; construction attains it"


def _run_ladder_DOMt(g: Graph, budget: Budget) -> str:
    m = g.n // 2
    top = value(g, "DOM_t", budget)
    a, b = 3 * m // 2 + 1, math.ceil(5 * g.n / 6)
    wit = gamma_t(ladder_max_orientation(m).orientation).value
    if not a <= top <= b or wit < a:
        raise _Refute(f"DOM_t={top} outside [{a}, {b}] or construction gamma_t={wit} < {a}", bundle(g))
    return f"{a} <= DOM_t(K2xP{m})={top} <= {b}; construction gamma_t={wit}"


def _run_c3c3_product(g: Graph, budget: Budget) -> str:
    lo = value(g, "dom_t", budget)
    if lo >= 9:
        raise _Refute(f"dom_t={lo} >= 9", bundle(g))
    return f"dom_t(C3xC3)={lo} < 9 = dom_t(C3)^2"


def _c3c3() -> Graph:
    return make_family(parse_family("cycle:3*cycle:3"))


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    anchor: str
    run: Callable[[Graph, Budget], str]
    instances: Callable[[], list[tuple[str, Graph]]] | None = None
    conjecture: bool = False

    @property
    def fixed(self) -> bool:
        return self.instances is not None


def _insts(*pairs):
    return lambda: [(label, make()) for label, make in pairs]


CHECKS: dict[str, Check] = {}


def _register(*checks: Check):
    for c in checks:
        CHECKS[c.check_id] = c


_register(
    Check("obs-td-cycle", "every component of G[S] contains a cycle for minimum TD-sets S", "G[S] has a cycle in each component", check_td_cycle),
    Check("obs-girth-bounds", "dom_t >= girth and DOM_t >= longest induced cycle", "g(G) <= dom_t(G); longest induced cycle <= DOM_t(G)", check_girth_bounds),
    Check("prop-unicyclic", "unicyclic graphs: dom_t = DOM_t = n - |L| and V - L dominates every valid orientation", "dom_t = DOM_t = |V| - |L| for unicyclic G", check_unicyclic),
    Check("thm-girth7-equiv", "girth >= 7: extremum equals girth iff cycle with pendant leaves", "g(G) >= 7: (DOM_t or dom_t = g) <=> (both = g) <=> cycle plus leaves", check_girth7),
    Check("lem-induced-monotone", "DOM_t(G - v) <= DOM_t(G) for vertex-deleted induced subgraphs in the class", "DOM_t(H) <= DOM_t(G) for induced H", check_induced_monotone),
    Check("thm-spanning-monotone", "dom_t(G) <= dom_t(G - e) for spanning subgraphs in the class", "dom_t(G) <= dom_t(H) for spanning H", check_spanning_monotone),
    Check("lem-remove-vertex-domt", "dom_t(G) <= dom_t(G - v) + 1", "dom_t(G) <= dom_t(G-v) + 1", check_remove_vertex_domt),
    Check("lem-remove-vertex-DOMt-exists", "some v has DOM_t(G) <= DOM_t(G - v) + 1 (G not a cycle)", "exists v: DOM_t(G) <= DOM_t(G-v) + 1", check_remove_vertex_DOMt_exists),
    Check("obs-DOM-vs-DOMt", "if a valid orientation attains DOM then DOM <= DOM_t", "DOM(G) <= DOM_t(G) when DOM is attained by a valid orientation", check_DOM_vs_DOMt),
    Check(
        "counterex-spanning-DOMt",
        "five-vertex graph whose spanning unicyclic subgraph has smaller DOM_t",
        "DOM_t(G) >= 4 > 3 = DOM_t(G - uv)",
        _run_spanning_counterexample,
        lambda: [("triangle-with-square", _five_vertex_example()[0])],
    ),
    Check("thm-Kn-bounds", "DOM_t(K_n) within the logarithmic bounds, 4 <= n <= 7", "log2 n - 2 log2 log2 n <= DOM_t(K_n) <= log2 n - log2 log2 n + 4", _run_kn_bounds, lambda: [(f"K{n}", complete(n)) for n in range(4, 8)]),
    Check("thm-Kn-sandwich", "DOM_t(K_{n+1}) is DOM_t(K_n) or DOM_t(K_n) + 1", "DOM_t(K_{n+1}) in {DOM_t(K_n), DOM_t(K_n) + 1}", _run_kn_sandwich, lambda: [(f"K{n}", complete(n)) for n in range(4, 8)]),
    Check("thm-tournament-bound", "gamma(T) <= log2 n - log2 log2 n + 2 for every tournament, 2 <= n <= 6", "gamma(T) <= log2 n - log2 log2 n + 2", _run_tournaments, lambda: [(f"K{n}", complete(n)) for n in range(2, 7)]),
    Check(
        "thm-bipartite-all",
        "K_{m,n}: dom_t = 4, DOM_t = m + 2, spectrum 4..m+2",
        "dom_t(K_{m,n}) = 4; DOM_t(K_{m,n}) = m + 2; every value between is attained",
        _run_bipartite,
        lambda: [(f"K{m},{n}", complete_bipartite(m, n)) for m in range(2, 6) for n in range(m, 6) if m * n <= 20],
    ),
    Check("lem-K2P3-outdeg", "every valid orientation of K2 x P3 has a vertex of out-degree >= 2", "K_2 box P_3: some out-degree >= 2", _run_k2p3, lambda: [("K2xP3", ladder(3))]),
    Check(
        "lem-grid-neighborhood",
        "|N[X]| <= 3|X| for connected cyclic vertex sets X of grids up to 5 x 5",
        "|N_G[V(H)]| <= 3|V(H)|",
        _run_grid_neighbourhood,
        lambda: [(f"P{m}xP{n}", grid(m, n)) for m in range(3, 6) for n in range(m, 6)],
    ),
    Check(
        "thm-grid-bounds",
        "grid bounds on small grids and all constructions up to 6 x 8",
        "mn/3 <= dom_t(P_m box P_n) <= construction size; DOM_t >= (mn + m)/2",
        lambda g, b: _run_grid_constructions(g, b) if g.n == 48 else _run_grid_bounds(g, b),
        lambda: [("P3xP3", grid(3, 3)), ("P3xP4", grid(3, 4)), ("constructions", grid(6, 8))],
    ),
    Check("thm-ladder-domt", "dom_t(K2 x P_m) = m if 4 | m, else m + 1", "dom_t(K_2 box P_m) = m or m + 1 by m mod 4", _run_ladder_domt, lambda: [(f"K2xP{m}", ladder(m)) for m in range(3, 9)]),
    Check(
        "thm-ladder-DOMt",
        "floor(3m/2) + 1 <= DOM_t(K2 x P_m) <= ceil(5n/6)",
        "floor(3m/2) + 1 <= DOM_t(K_2 box P_m) <= ceil(5 n(G)/6)",
        _run_ladder_DOMt,
        lambda: [(f"K2xP{m}", ladder(m)) for m in range(3, 7)],
    ),
    Check("remark-vizing-fails", "dom_t(C3 x C3) < 9", "dom_t(C_3 box C_3) < dom_t(C_3)^2", _run_c3c3_product, lambda: [("C3xC3", _c3c3())]),
    Check("lem-max-degree-3", "dom_t = n - 1 forces max degree <= 3", "dom_t = n - 1 => Delta <= 3", check_max_degree_3),
    Check("lem-deg3-clique", "dom_t = n - 1 forces degree-3 vertices to be pairwise adjacent (or K2,3)", "dom_t = n - 1 => degree-3 vertices form a clique", check_deg3_clique),
    Check("lem-one-deg3", "dom_t = n - 1 forces at most one degree-3 vertex (or K4, K2,3, K4 - e)", "dom_t = n - 1 => at most one degree-3 vertex", check_one_deg3),
    Check("thm-extreme-n-minus-1", "dom_t = n - 1 exactly for the cycle-plus-pendant-path family, K4, K2,3, K4 - e", "dom_t(G) = n - 1 <=> G in F or G in {K4, K2,3, K4 - e}", check_extreme),
    Check("conj-spectrum-contiguous", "every value between dom_t and DOM_t is attained", "spectrum of gamma_t over valid orientations is an interval", check_spectrum, conjecture=True),
    Check("conj-DOMt-remove-vertex", "DOM_t(G) <= DOM_t(G - v) + 1 whenever G - v is in the class", "DOM_t(G) <= DOM_t(G-v) + 1", check_conj_remove_vertex, conjecture=True),
)


def list_checks() -> list[tuple[str, str, str]]:
    return [(c.check_id, c.description, c.anchor) for c in CHECKS.values()]


def get_check(check_id: str) -> Check:
    try:
        return CHECKS[check_id]
    except KeyError:
        raise UnknownCheck(f"unknown check {check_id!r}") from None


def _run_one(check: Check, label: str, g: Graph, budget: Budget) -> CheckOutcome:
    if check.fixed and budget.edge_limit < opt.DEFAULT_EDGE_CAP:
        # fixed instances are chosen to be exhaustible; only the general edge cap applies
        budget = replace(budget, edge_limit=opt.DEFAULT_EDGE_CAP)
    try:
        detail = check.run(g, budget)
        return CheckOutcome(check.check_id, label, "verified", detail)
    except _Refute as r:
        return CheckOutcome(check.check_id, label, "refuted", r.detail, counterexample=r.bundle)
    except _Skip as s:
        return CheckOutcome(check.check_id, label, "skipped", s.detail, reason=s.reason)
    except EmptyByTreeComponent as e:
        return CheckOutcome(check.check_id, label, "skipped", str(e), reason="precondition")


def run_check(check_id: str, target: Graph | Corpus | None = None, budget: Budget | None = None) -> list[CheckOutcome]:
    """Outcomes of one check on a graph, a corpus, or (fixed checks) its own instances."""
    check = get_check(check_id)
    budget = budget or Budget()
    if check.fixed:
        instances = check.instances()
        if target is None or isinstance(target, Corpus):
            return [_run_one(check, label, g, budget) for label, g in instances]
        key = canonical_code(target)
        for label, g in instances:
            if canonical_code(g) == key:
                return [_run_one(check, encode_graph6(target), target, budget)]
        return [CheckOutcome(check_id, encode_graph6(target), "skipped", "graph is not one of this check's instances", reason="precondition")]
    if target is None:
        raise ValueError(f"{check_id} needs a graph or corpus target")
    if isinstance(target, Graph):
        return [_run_one(check, encode_graph6(target), target, budget)]
    return [_run_one(check, item.label, item.graph, budget) for item in target.items() if item.graph is not None]


def replay(outcome: CheckOutcome, budget: Budget | None = None) -> CheckOutcome:
    """Re-run a refuted outcome's check on its counterexample graph."""
    if outcome.counterexample is None:
        raise ValueError("outcome carries no counterexample")
    g = parse_graph6(outcome.counterexample["graph6"])
    check = get_check(outcome.check_id)
    return _run_one(check, encode_graph6(g), g, budget or Budget())


# ---------------------------------------------------------------------------
# Scanning


@dataclass
class ScanSummary:
    corpus: str
    graphs: int = 0
    parse_errors: int = 0
    counts: dict = field(default_factory=dict)  # checkId -> {status: count}
    min_gap: int | None = None  # smallest DOM_t - dom_t seen
    max_gap: int | None = None
    equal_extrema: list = field(default_factory=list)  # graphs with dom_t == DOM_t
    DOMt_n_minus_1: list = field(default_factory=list)  # graphs with DOM_t == n - 1
    refutations: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps({"summary": asdict(self)}, sort_keys=True)


def _scan_graph(args):
    label, g6, ids, budget = args
    g = parse_graph6(g6)
    outs = []
    for cid in ids:
        outs.append(_run_one(CHECKS[cid], label, g, budget))
    extra = {}
    if g.in_class_c() and g.m <= budget.edge_limit:
        try:
            lo, hi = value(g, "dom_t", budget), value(g, "DOM_t", budget)
            extra = {"dom_t": lo, "DOM_t": hi, "n": g.n}
        except _Skip:
            pass
    return outs, extra


def scan(
    corpus: Corpus,
    check_ids: Iterable[str] | None = None,
    budget: Budget | None = None,
    output: str | None = None,
    cursor: str | None = None,
    workers: int = 1,
    halt_on_refute: bool = False,
) -> Iterator[CheckOutcome | ScanSummary]:
    """Run checks over a corpus, yielding outcomes then a final :class:`ScanSummary`.

    Per-graph checks run on each corpus graph; fixed checks run once on their
    own instances.  With ``cursor`` set, the raw index of the last finished
    graph is persisted there and a later scan resumes after it.  Outcomes are
    appended to ``output`` as JSON lines.
    """
    budget = budget or Budget()
    ids = list(check_ids) if check_ids else list(CHECKS)
    for cid in ids:
        get_check(cid)
    per_graph = [c for c in ids if not CHECKS[c].fixed]
    fixed = [c for c in ids if CHECKS[c].fixed]
    summary = ScanSummary(corpus.describe())
    start = 0
    if cursor and os.path.exists(cursor):
        with open(cursor) as fh:
            start = int(json.load(fh)["next"])
    sink = open(output, "a" if start else "w") if output else None

    def emit(o: CheckOutcome):
        st = summary.counts.setdefault(o.check_id, {"verified": 0, "refuted": 0, "skipped": 0})
        st[o.status] = st.get(o.status, 0) + 1
        if o.status == "refuted":
            summary.refutations.append({"checkId": o.check_id, "target": o.target, "counterexample": o.counterexample})
        if sink:
            sink.write(o.to_json() + "\n")
            sink.flush()

    def save_cursor(nxt: int):
        if cursor:
            tmp = cursor + ".tmp"
            with open(tmp, "w") as fh:
                json.dump({"next": nxt}, fh)
            os.replace(tmp, cursor)

    try:
        if start == 0:
            for cid in fixed:
                for o in run_check(cid, None, budget):
                    emit(o)
                    yield o
                    if halt_on_refute and o.status == "refuted":
                        yield summary
                        return
        items = list(corpus.items(start))
        jobs = [(it.label, encode_graph6(it.graph), per_graph, budget) for it in items if it.graph is not None]
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = iter(pool.map(_scan_graph, jobs, chunksize=4))
                done = [next(results) if it.graph is not None else None for it in items]
        else:
            done = None
        for k, it in enumerate(items):
            if it.graph is None:
                summary.parse_errors += 1
                o = CheckOutcome("parse", it.label, "skipped", str(it.error), reason="parseError")
                emit(o)
                yield o
                save_cursor(it.index + 1)
                continue
            if done is not None:
                outs, extra = done[k]
            else:
                outs, extra = _scan_graph((it.label, encode_graph6(it.graph), per_graph, budget))
            summary.graphs += 1
            if extra:
                gap = extra["DOM_t"] - extra["dom_t"]
                summary.min_gap = gap if summary.min_gap is None else min(summary.min_gap, gap)
                summary.max_gap = gap if summary.max_gap is None else max(summary.max_gap, gap)
                if gap == 0:
                    summary.equal_extrema.append(it.label)
                if extra["DOM_t"] == extra["n"] - 1:
                    summary.DOMt_n_minus_1.append(it.label)
            halted = False
            for o in outs:
                emit(o)
                yield o
                if halt_on_refute and o.status == "refuted":
                    halted = True
            save_cursor(it.index + 1)
            if halted:
                break
    finally:
        if sink:
            sink.close()
    yield summary
