"""Exact optimization of total domination over the orientations of a graph.

The search walks the edges in canonical order, trying direction bit 0
before 1, so orientations are visited in lexicographic order of their
direction bits.  Two propagation rules keep every leaf valid: an edge may
not leave its tail without an in-neighbor when that was the tail's last
undecided edge, and (consequently) a vertex with no in-arc and one undecided
edge gets that edge pointed inward.

Subtrees are pruned with bounds that hold for every completion of the
partial orientation ``P``:

* min gamma_t: gamma_t of ``P`` plus every undecided edge in both
  directions (adding arcs never increases gamma_t);
* max gamma_t: the cheapest way to cover V with out-neighborhoods in ``P``
  plus one extra vertex per still-uncovered vertex;
* max gamma: gamma of ``P`` itself.

Work is split into shards by the first few edges.  Shards never share
state, results are combined by min/max/union and the witness is taken from
the first shard (in stream order) attaining the optimum, so the output does
not depend on how many workers ran the shards.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .errors import BudgetExceeded, EmptyByTreeComponent, TooManyOrientations
from .graph import Graph, Orientation, girth
from .solver import TDCertificate, cover_number, gamma, gamma_t, undirected_total_domination

DEFAULT_EDGE_CAP = int(os.environ.get("ORIENTDOM_EDGE_CAP", "30"))
DEFAULT_NODE_BUDGET = 10**7
SHARD_DEPTH = 4


@dataclass(frozen=True)
class ExtremumReport:
    quantity: str  # "dom_t", "DOM_t" or "DOM"
    value: int
    witness: Orientation
    cert: TDCertificate
    orientations_considered: int
    pruned_subtrees: int
    elapsed: float
    exact: bool = True
    nodes: int = 0


@dataclass(frozen=True)
class Spectrum:
    values: tuple[int, ...]
    witnesses: dict[int, Orientation] = field(hash=False, compare=False)
    contiguous: bool = True
    orientations_considered: int = 0
    pruned_subtrees: int = 0
    elapsed: float = 0.0
    exact: bool = True

    @property
    def min(self) -> int:
        return self.values[0]

    @property
    def max(self) -> int:
        return self.values[-1]


# ---------------------------------------------------------------------------
# Plain stream of valid orientations


def _check_orientable(g: Graph):
    if not g.every_component_cyclic():
        raise EmptyByTreeComponent("a component of the graph is a tree; no valid orientation exists")


def _check_cap(g: Graph, edge_cap: int | None):
    if edge_cap is not None and g.m > edge_cap:
        raise TooManyOrientations(f"{g.m} edges exceed the edge cap of {edge_cap}; raise the cap to run anyway")


def enumerate_valid_orientations(g: Graph, edge_cap: int | None = DEFAULT_EDGE_CAP) -> Iterator[Orientation]:
    """Every valid orientation of ``g`` in lexicographic order of direction bits."""
    _check_orientable(g)
    _check_cap(g, edge_cap)
    yield from _stream(g, valid_only=True)


def enumerate_orientations(g: Graph, edge_cap: int | None = DEFAULT_EDGE_CAP) -> Iterator[Orientation]:
    """All ``2^m`` orientations (valid or not) in lexicographic order."""
    _check_cap(g, edge_cap)
    yield from _stream(g, valid_only=False)


def _stream(g: Graph, valid_only: bool) -> Iterator[Orientation]:
    m = g.m
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]
    indeg = [0] * g.n
    rem = list(g.degrees)
    dirs = [0] * m
    choice = [-1] * (m + 1)  # last option tried at each depth
    k = 0
    while k >= 0:
        if k == m:
            yield Orientation(g, tuple(dirs))
            k -= 1
            continue
        u, v = eu[k], ev[k]
        prev = choice[k]
        if prev >= 0:
            # undo the previous option at this depth
            indeg[v if prev == 0 else u] -= 1
        else:
            rem[u] -= 1
            rem[v] -= 1
        nxt = prev + 1
        while nxt <= 1:
            tail = u if nxt == 0 else v
            if not valid_only or indeg[tail] or rem[tail]:
                break
            nxt += 1
        if nxt > 1:
            rem[u] += 1
            rem[v] += 1
            choice[k] = -1
            k -= 1
            continue
        choice[k] = nxt
        dirs[k] = nxt
        indeg[v if nxt == 0 else u] += 1
        k += 1


# ---------------------------------------------------------------------------
# Shard search


class _Stop(Exception):
    pass


def _shard_prefixes(g: Graph, depth: int, valid_only: bool) -> list[tuple[int, ...]]:
    """Consistent direction prefixes of the first ``depth`` edges, in order."""
    depth = min(depth, g.m)
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]
    indeg = [0] * g.n
    rem = list(g.degrees)
    out: list[tuple[int, ...]] = []
    cur: list[int] = []

    def rec(k):
        if k == depth:
            out.append(tuple(cur))
            return
        u, v = eu[k], ev[k]
        rem[u] -= 1
        rem[v] -= 1
        for d in (0, 1):
            tail, head = (u, v) if d == 0 else (v, u)
            if valid_only and not indeg[tail] and not rem[tail]:
                continue
            indeg[head] += 1
            cur.append(d)
            rec(k + 1)
            cur.pop()
            indeg[head] -= 1
        rem[u] += 1
        rem[v] += 1

    rec(0)
    return out


def _search_shard(edges, n, mode, prefix, cutoff, target, budget):
    """Search one subtree.

    ``mode`` is "min_t", "max_t", "max_g" or "spectrum".  For the optimizing
    modes only leaves strictly better than ``cutoff`` are recorded, and the
    shard stops once ``target`` is attained.  Returns a plain dict so that
    shards can cross process boundaries.
    """
    m = len(edges)
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    valid_only = mode != "max_g"
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    indeg = [0] * n
    rem = [a.bit_count() for a in adj]
    out = [0] * n
    inn = [0] * n
    out_u = list(adj)  # decided arcs plus both directions of undecided edges
    in_u = list(adj)
    dirs = [0] * m
    selfbit = [1 << v for v in range(n)]
    wild = [1 << (n + v) for v in range(n)]
    nsets2 = 2 * n
    st = {
        "best": cutoff,
        "best_dirs": None,
        "leaves": 0,
        "pruned": 0,
        "nodes": 0,
        "found": {},
        "budget_hit": False,
    }
    found = st["found"]

    def apply(k, d):
        u, v = eu[k], ev[k]
        t, h = (u, v) if d == 0 else (v, u)
        rem[u] -= 1
        rem[v] -= 1
        indeg[h] += 1
        out[t] |= 1 << h
        inn[h] |= 1 << t
        out_u[h] &= ~(1 << t)
        in_u[t] &= ~(1 << h)
        dirs[k] = d

    def undo(k, d):
        u, v = eu[k], ev[k]
        t, h = (u, v) if d == 0 else (v, u)
        rem[u] += 1
        rem[v] += 1
        indeg[h] -= 1
        out[t] &= ~(1 << h)
        inn[h] &= ~(1 << t)
        out_u[h] |= 1 << t
        in_u[t] |= 1 << h

    def upper_t():
        # cover V by out-neighborhoods of P, or by a private "wildcard" per vertex
        cover = out + selfbit
        coverers = [inn[v] | wild[v] for v in range(n)]
        return cover, coverers

    def leaf():
        st["leaves"] += 1
        best = st["best"]
        if mode == "min_t":
            val = cover_number(out, inn, n, best - 1)[0]
            if val < best:
                st["best"] = val
                st["best_dirs"] = tuple(dirs)
                if val <= target:
                    raise _Stop
        elif mode == "max_t":
            val = cover_number(out, inn, n)[0]
            if val > best:
                st["best"] = val
                st["best_dirs"] = tuple(dirs)
                if target is not None and val >= target:
                    raise _Stop
        elif mode == "max_g":
            cov = [out[v] | selfbit[v] for v in range(n)]
            cvr = [inn[v] | selfbit[v] for v in range(n)]
            val = cover_number(cov, cvr, n)[0]
            if val > best:
                st["best"] = val
                st["best_dirs"] = tuple(dirs)
        else:
            val = cover_number(out, inn, n)[0]
            if val not in found:
                found[val] = tuple(dirs)

    def prune(k) -> bool:
        best = st["best"]
        if mode == "min_t":
            return cover_number(out_u, in_u, n, best - 1)[0] >= best
        if mode == "max_t":
            cover, coverers = upper_t()
            return cover_number(cover, coverers, n, best, nsets=nsets2)[0] <= best
        if mode == "max_g":
            cov = [out[v] | selfbit[v] for v in range(n)]
            cvr = [inn[v] | selfbit[v] for v in range(n)]
            return cover_number(cov, cvr, n, best)[0] <= best
        if not found:
            return False
        lo = cover_number(out_u, in_u, n)[0]
        cover, coverers = upper_t()
        hi = cover_number(cover, coverers, n, nsets=nsets2)[0]
        return all(c in found for c in range(lo, hi + 1))

    def rec(k):
        st["nodes"] += 1
        if st["nodes"] > budget:
            st["budget_hit"] = True
            raise _Stop
        if k == m:
            leaf()
            return
        if k > start and k < m - 1 and prune(k):
            st["pruned"] += 1
            return
        u, v = eu[k], ev[k]
        for d in (0, 1):
            tail = u if d == 0 else v
            if valid_only and not indeg[tail] and rem[tail] == 1:
                continue
            apply(k, d)
            rec(k + 1)
            undo(k, d)

    for k, d in enumerate(prefix):
        apply(k, d)
    start = len(prefix)
    if valid_only and any(indeg[v] == 0 and rem[v] == 0 for v in range(n)):
        return st
    try:
        rec(start)
    except _Stop:
        pass
    return st


# ---------------------------------------------------------------------------
# Drivers


def _workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("ORIENTDOM_WORKERS")
        workers = int(env) if env else 1
    return max(1, workers)


def _run_shards(g, mode, cutoff, target, node_budget, workers, stop_early):
    prefixes = _shard_prefixes(g, SHARD_DEPTH, valid_only=mode != "max_g")
    per_shard = max(1, -(-node_budget // max(1, len(prefixes))))
    args = [(g.edges, g.n, mode, p, cutoff, target, per_shard) for p in prefixes]
    results = []
    if workers <= 1 or len(args) <= 1:
        for a in args:
            r = _search_shard(*a)
            results.append(r)
            if stop_early(r):
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_search_shard, *a) for a in args]
            for fut in futures:
                r = fut.result()
                results.append(r)
                if stop_early(r):
                    for f in futures:
                        f.cancel()
                    break
    return results


def _components(g: Graph):
    """Yield ``(subgraph, original edge indices)`` per component, in vertex order."""
    for comp in g.components:
        verts = sorted(comp)
        sub = g.induced_subgraph(verts)
        idx = [g.edge_index[(verts[u], verts[v])] for u, v in sub.edges]
        yield sub, idx


def _combine(g: Graph, quantity: str, parts, t0) -> ExtremumReport:
    dirs = [0] * g.m
    for rep, idx in parts:
        for i, d in zip(idx, rep.witness.dirs):
            dirs[i] = d
    witness = Orientation(g, tuple(dirs))
    sol = gamma(witness) if quantity == "DOM" else gamma_t(witness)
    return ExtremumReport(
        quantity=quantity,
        value=sum(rep.value for rep, _ in parts),
        witness=witness,
        cert=sol.cert,
        orientations_considered=sum(rep.orientations_considered for rep, _ in parts),
        pruned_subtrees=sum(rep.pruned_subtrees for rep, _ in parts),
        elapsed=time.perf_counter() - t0,
        exact=all(rep.exact for rep, _ in parts),
        nodes=sum(rep.nodes for rep, _ in parts),
    )


def _flip_search(g: Graph, mode: str) -> int:
    """Cheap deterministic incumbent: first-improvement edge flips from the first valid orientation."""
    if mode == "max_g":
        dirs = [0] * g.m
    else:
        dirs = list(next(_stream(g, valid_only=True)).dirs)

    def value(ds):
        o = Orientation(g, tuple(ds))
        if mode == "max_g":
            cov = [o.out_masks[v] | 1 << v for v in range(g.n)]
            cvr = [o.in_masks[v] | 1 << v for v in range(g.n)]
            return cover_number(cov, cvr, g.n)[0]
        if not all(o.in_masks):
            return None
        return cover_number(o.out_masks, o.in_masks, g.n)[0]

    cur = value(dirs)
    better = (lambda a, b: a < b) if mode == "min_t" else (lambda a, b: a > b)
    for _ in range(3):
        improved = False
        for i in range(g.m):
            dirs[i] ^= 1
            val = value(dirs)
            if val is not None and better(val, cur):
                cur, improved = val, True
            else:
                dirs[i] ^= 1
        if not improved:
            break
    return cur


def _optimize(g: Graph, quantity: str, edge_cap, node_budget, workers, upper_bound=None) -> ExtremumReport:
    t0 = time.perf_counter()
    mode = {"dom_t": "min_t", "DOM_t": "max_t", "DOM": "max_g"}[quantity]
    if mode != "max_g":
        _check_orientable(g)
    _check_cap(g, edge_cap)
    if len(g.components) > 1:
        parts = [(_optimize(sub, quantity, None, node_budget, workers), idx) for sub, idx in _components(g)]
        return _combine(g, quantity, parts, t0)
    if g.m == 0:
        witness = Orientation(g, ())
        sol = gamma(witness)
        return ExtremumReport(quantity, sol.value, witness, sol.cert, 1, 0, time.perf_counter() - t0, True, 1)

    workers = _workers(workers)
    seed = _flip_search(g, mode)
    if mode == "min_t":
        target = max(undirected_total_domination(g) or 0, int(girth(g)))
        cutoff = seed + 1

        def stop_early(r):
            return r["best"] <= target

    else:
        target = upper_bound if mode == "max_t" else None
        cutoff = seed - 1

        def stop_early(r):
            return target is not None and r["best"] >= target

    results = _run_shards(g, mode, cutoff, target, node_budget, workers, stop_early)
    winner = None
    for r in results:
        if r["best_dirs"] is None:
            continue
        if winner is None or (r["best"] < winner["best"] if mode == "min_t" else r["best"] > winner["best"]):
            winner = r
    exact = not any(r["budget_hit"] for r in results)
    if winner is None:
        # only possible when the budget ran out before any shard reached the seed value
        raise BudgetExceeded(f"{quantity} search exhausted its node budget before finding a witness")
    witness = Orientation(g, winner["best_dirs"])
    sol = gamma(witness) if mode == "max_g" else gamma_t(witness)
    report = ExtremumReport(
        quantity=quantity,
        value=sol.value,
        witness=witness,
        cert=sol.cert,
        orientations_considered=sum(r["leaves"] for r in results),
        pruned_subtrees=sum(r["pruned"] for r in results),
        elapsed=time.perf_counter() - t0,
        exact=exact,
        nodes=sum(r["nodes"] for r in results),
    )
    if not exact:
        raise BudgetExceeded(f"{quantity} search exhausted its node budget; value is only a bound", report)
    return report


def dom_t(g: Graph, edge_cap: int | None = DEFAULT_EDGE_CAP, node_budget: int = DEFAULT_NODE_BUDGET, workers: int | None = None) -> ExtremumReport:
    """Minimum of gamma_t over all valid orientations."""
    return _optimize(g, "dom_t", edge_cap, node_budget, workers)


def DOM_t(
    g: Graph,
    edge_cap: int | None = DEFAULT_EDGE_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int | None = None,
    upper_bound: int | None = None,
) -> ExtremumReport:
    """Maximum of gamma_t over all valid orientations.

    ``upper_bound`` is a value already known not to be exceedable; the search
    stops as soon as it is attained.  Leave it unset to prove the maximum.
    """
    return _optimize(g, "DOM_t", edge_cap, node_budget, workers, upper_bound)


def DOM(g: Graph, edge_cap: int | None = DEFAULT_EDGE_CAP, node_budget: int = DEFAULT_NODE_BUDGET, workers: int | None = None) -> ExtremumReport:
    """Maximum of gamma over all orientations (validity not required)."""
    return _optimize(g, "DOM", edge_cap, node_budget, workers)


def td_spectrum(g: Graph, edge_cap: int | None = DEFAULT_EDGE_CAP, node_budget: int = DEFAULT_NODE_BUDGET, workers: int | None = None) -> Spectrum:
    """Every value gamma_t(G_f) over valid f, with the first witness of each."""
    t0 = time.perf_counter()
    _check_orientable(g)
    _check_cap(g, edge_cap)
    if g.m == 0:
        return Spectrum((0,), {0: Orientation(g, ())}, True, 1, 0, time.perf_counter() - t0)
    results = _run_shards(g, "spectrum", None, None, node_budget, _workers(workers), lambda r: False)
    witnesses: dict[int, Orientation] = {}
    for r in results:
        for val, ds in r["found"].items():
            if val not in witnesses:
                witnesses[val] = Orientation(g, ds)
    values = tuple(sorted(witnesses))
    spec = Spectrum(
        values=values,
        witnesses=dict(sorted(witnesses.items())),
        contiguous=values == tuple(range(values[0], values[-1] + 1)),
        orientations_considered=sum(r["leaves"] for r in results),
        pruned_subtrees=sum(r["pruned"] for r in results),
        elapsed=time.perf_counter() - t0,
        exact=not any(r["budget_hit"] for r in results),
    )
    if not spec.exact:
        raise BudgetExceeded("spectrum search exhausted its node budget", spec)
    return spec
