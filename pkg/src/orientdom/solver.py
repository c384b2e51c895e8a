"""Exact total domination and domination numbers of digraphs.

Both problems are minimum set cover over the vertex set: for gamma_t the
sets are the open out-neighborhoods, for gamma the closed ones.  The search
forces the unique coverer of any element that has only one, then branches
on the uncovered element with the fewest coverers, bounding with a greedy
disjoint-coverer packing and ``ceil(uncovered / max set size)``.  Subproblems
are memoized on the uncovered mask.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import NotInSet, NotValidOrientation
from .graph import Graph, Orientation, bits, to_mask, zero_in_degree_vertex


@dataclass(frozen=True)
class TDCertificate:
    """A vertex set plus, for every dominated vertex, one dominator in the set.

    ``total`` distinguishes a total dominating set (every vertex, members
    included, has an in-neighbor in the set) from a dominating set (only
    non-members need one).
    """

    set: frozenset[int]
    dominator_of: dict[int, int] = field(hash=False, compare=False)
    total: bool = True

    def sorted_set(self) -> list[int]:
        return sorted(self.set)

    def check(self, o: Orientation) -> bool:
        for v in range(o.n):
            if not self.total and v in self.set:
                continue
            s = self.dominator_of.get(v)
            if s is None or s not in self.set or not o.has_arc(s, v):
                return False
        return True


@dataclass(frozen=True)
class SolveStats:
    nodes_explored: int
    forced_vertices: int
    elapsed: float


class Solution(NamedTuple):
    value: int
    cert: TDCertificate
    stats: SolveStats


def _greedy_extra(R: int, cover: Sequence[int], candidates: int) -> int:
    """Sets needed by greedy max-coverage to cover ``R`` (or a huge number if stuck)."""
    count = 0
    while R:
        best_gain, best_u = 0, -1
        c = candidates
        while c:
            low = c & -c
            u = low.bit_length() - 1
            gain = (cover[u] & R).bit_count()
            if gain > best_gain:
                best_gain, best_u = gain, u
            c ^= low
        if best_u < 0:
            return 1 << 30
        R &= ~cover[best_u]
        count += 1
    return count


class _CoverSearch:
    """Minimum cover of a target mask with memoized branch and bound."""

    __slots__ = ("cover", "coverers", "ncov", "maxcov", "memo", "nodes")

    def __init__(self, cover: Sequence[int], coverers: Sequence[int]):
        self.cover = cover
        self.coverers = coverers
        self.ncov = [c.bit_count() for c in coverers]
        self.maxcov = max((c.bit_count() for c in cover), default=0) or 1
        self.memo: dict[int, tuple[int, bool]] = {}
        self.nodes = 0

    def search(self, R: int, budget: int) -> int:
        """Exact minimum if it is <= budget, otherwise some lower bound > budget."""
        if not R:
            return 0
        if budget <= 0:
            return 1
        hit = self.memo.get(R)
        if hit is not None:
            val, exact = hit
            if exact or val > budget:
                return val
        self.nodes += 1
        coverers, ncov = self.coverers, self.ncov
        lb = -(-R.bit_count() // self.maxcov)
        packed = used = 0
        pivot, pivot_deg = -1, 1 << 30
        rest = R
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            c = coverers[v]
            if not c:
                self.memo[R] = (1 << 30, True)
                return 1 << 30
            if ncov[v] < pivot_deg:
                pivot, pivot_deg = v, ncov[v]
            if not c & used:
                used |= c
                packed += 1
            rest ^= low
        if packed > lb:
            lb = packed
        if lb > budget:
            self.memo[R] = (lb, False)
            return lb
        cover = self.cover
        best = budget + 1
        c = coverers[pivot]
        while c:
            low = c & -c
            u = low.bit_length() - 1
            r = self.search(R & ~cover[u], best - 2)
            if r + 1 < best:
                best = r + 1
                if best <= lb:
                    break
            c ^= low
        if best <= budget:
            self.memo[R] = (best, True)
            return best
        self.memo[R] = (budget + 1, False)
        return budget + 1


def _forced(R: int, coverers: Sequence[int]) -> int:
    forced = 0
    while R:
        low = R & -R
        c = coverers[low.bit_length() - 1]
        if c and not c & (c - 1):
            forced |= c
        R ^= low
    return forced


def cover_number(
    cover: Sequence[int], coverers: Sequence[int], n: int, limit: int | None = None, nsets: int | None = None
) -> tuple[int, int, int]:
    """Minimum number of sets ``cover[u]`` whose union is ``{0..n-1}``.

    Returns ``(value, nodes, forced_count)``.  With ``limit`` set, the value
    is exact only when it is ``<= limit``; otherwise it is merely ``> limit``.
    Every element must have at least one coverer.  ``nsets`` defaults to
    ``n`` (sets indexed by vertices).
    """
    full = (1 << n) - 1
    candidates = (1 << (n if nsets is None else nsets)) - 1
    forced = _forced(full, coverers)
    covered = 0
    f = forced
    while f:
        low = f & -f
        covered |= cover[low.bit_length() - 1]
        f ^= low
    k0 = forced.bit_count()
    R = full & ~covered
    if not R:
        return k0, 1, k0
    if limit is not None and k0 >= limit + 1:
        return k0 + 1, 1, k0
    extra = _greedy_extra(R, cover, candidates)
    budget = extra - 1
    if limit is not None:
        budget = min(budget, limit - k0)
    s = _CoverSearch(cover, coverers)
    val = s.search(R, budget)
    if val > budget and budget == extra - 1:
        val = extra
    return k0 + val, s.nodes + 1, k0


def lex_min_cover(cover: Sequence[int], coverers: Sequence[int], n: int, k: int) -> tuple[tuple[int, ...], int]:
    """Lexicographically smallest sorted cover of size ``k`` (``k`` must be optimal).

    Vertices are decided in index order, each included whenever a cover of
    the right size still exists using only later vertices.
    """
    full = (1 << n) - 1
    chosen: list[int] = []
    R = full
    nodes = 0
    for u in range(n):
        if len(chosen) == k or not R:
            break
        later = full & ~((1 << (u + 1)) - 1)
        R1 = R & ~cover[u]
        need = k - len(chosen) - 1
        restricted = [c & later for c in coverers]
        ok = True
        rest = R1
        while rest:
            low = rest & -rest
            if not restricted[low.bit_length() - 1]:
                ok = False
                break
            rest ^= low
        if ok:
            s = _CoverSearch(cover, restricted)
            ok = s.search(R1, need) <= need
            nodes += s.nodes
        if ok:
            chosen.append(u)
            R = R1
    if R:
        raise AssertionError("lex_min_cover called with a non-optimal or infeasible k")
    return tuple(chosen), nodes


def _dominators(o: Orientation, S: Iterable[int], total: bool) -> dict[int, int]:
    smask = to_mask(S)
    dom = {}
    for v in range(o.n):
        if not total and smask >> v & 1:
            continue
        cand = o.in_masks[v] & smask
        if cand:
            dom[v] = (cand & -cand).bit_length() - 1
    return dom


def gamma_t(o: Orientation) -> Solution:
    """Total domination number of a valid orientation with a certificate.

    The certificate is the lexicographically smallest minimum TD-set.
    """
    t0 = time.perf_counter()
    bad = zero_in_degree_vertex(o)
    if bad is not None:
        raise NotValidOrientation(bad)
    out, inn = o.out_masks, o.in_masks
    value, nodes, forced = cover_number(out, inn, o.n)
    S, lex_nodes = lex_min_cover(out, inn, o.n, value)
    cert = TDCertificate(frozenset(S), _dominators(o, S, True), True)
    return Solution(value, cert, SolveStats(max(nodes + lex_nodes, 1), forced, time.perf_counter() - t0))


def gamma(o: Orientation) -> Solution:
    """Domination number: fewest vertices whose closed out-neighborhoods cover V."""
    t0 = time.perf_counter()
    cover = [m | 1 << v for v, m in enumerate(o.out_masks)]
    coverers = [m | 1 << v for v, m in enumerate(o.in_masks)]
    value, nodes, forced = cover_number(cover, coverers, o.n)
    S, lex_nodes = lex_min_cover(cover, coverers, o.n, value)
    cert = TDCertificate(frozenset(S), _dominators(o, S, False), False)
    return Solution(value, cert, SolveStats(max(nodes + lex_nodes, 1), forced, time.perf_counter() - t0))


def gamma_t_value(o: Orientation) -> int:
    bad = zero_in_degree_vertex(o)
    if bad is not None:
        raise NotValidOrientation(bad)
    return cover_number(o.out_masks, o.in_masks, o.n)[0]


def gamma_value(o: Orientation) -> int:
    cover = [m | 1 << v for v, m in enumerate(o.out_masks)]
    coverers = [m | 1 << v for v, m in enumerate(o.in_masks)]
    return cover_number(cover, coverers, o.n)[0]


def undirected_total_domination(g: Graph) -> int | None:
    """gamma_t of the undirected graph (``None`` if it has an isolated vertex)."""
    if any(a == 0 for a in g.adj):
        return None
    return cover_number(g.adj, g.adj, g.n)[0]


def is_total_dominating(o: Orientation, s: Iterable[int]) -> bool:
    covered = 0
    for u in s:
        covered |= o.out_masks[u]
    return covered == (1 << o.n) - 1


def is_dominating(o: Orientation, s: Iterable[int]) -> bool:
    covered = 0
    for u in s:
        covered |= o.out_masks[u] | 1 << u
    return covered == (1 << o.n) - 1


def private_neighbors(o: Orientation, s: Iterable[int], v: int) -> frozenset[int]:
    """Vertices whose only in-neighbor inside ``s`` is ``v``."""
    smask = to_mask(s)
    if not smask >> v & 1:
        raise NotInSet(f"vertex {v} is not in the set")
    target = 1 << v
    return frozenset(w for w in range(o.n) if o.in_masks[w] & smask == target)


__all__ = [
    "TDCertificate",
    "SolveStats",
    "Solution",
    "gamma_t",
    "gamma",
    "gamma_t_value",
    "gamma_value",
    "cover_number",
    "lex_min_cover",
    "is_total_dominating",
    "is_dominating",
    "private_neighbors",
    "undirected_total_domination",
    "bits",
]
