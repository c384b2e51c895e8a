"""Undirected graphs, orientations and structural analysis.

Vertices are always ``0..n-1``.  Edges are stored as a sorted tuple of
``(u, v)`` pairs with ``u < v``; an orientation is one bit per edge in that
order (0 means ``u -> v``, 1 means ``v -> u``).  Neighborhoods are kept as
Python ints used as bitsets.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BudgetExceeded,
    DirLengthMismatch,
    DuplicateEdge,
    InvalidEdge,
    OutOfRange,
    TooLarge,
)

INF = math.inf
DEFAULT_PRODUCT_CAP = 64
DEFAULT_CYCLE_BUDGET = 10**7


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise OutOfRange("vertex count must be non-negative")
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidEdge(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise OutOfRange(f"edge {e} not canonical for n={self.n}")
            if prev is not None and e <= prev:
                raise DuplicateEdge(f"edges not strictly increasing at {e}")
            prev = e

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(frozenset(bits(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def in_class_c(self) -> bool:
        """Connected and containing a cycle."""
        return self.n > 0 and self.is_connected() and self.m >= self.n

    def every_component_cyclic(self) -> bool:
        for comp in self.components:
            ce = sum(1 for u, v in self.edges if u in comp)
            if ce < len(comp):
                return False
        return True

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), tuple(sorted(edges)))

    def remove_vertex(self, v: int) -> Graph:
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def spanning_subgraph(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return build_graph(self.n, edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Canonicalize ``edges`` into a :class:`Graph`.

    Loops, duplicates (in either direction) and out-of-range endpoints are
    rejected rather than silently repaired.
    """
    seen = set()
    canon = []
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} given twice")
        seen.add(e)
        canon.append(e)
    canon.sort()
    return Graph(n, tuple(canon))


def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n m\\nu v\\n..."`` text format."""
    from .errors import ParseError

    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ParseError("empty edge list", 0)
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise ParseError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise ParseError(f"header declares {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def cartesian_product(g: Graph, h: Graph, max_vertices: int = DEFAULT_PRODUCT_CAP) -> Graph:
    """G box H with vertex ``(a, b)`` numbered ``a * n(H) + b``."""
    if g.n == 0 or h.n == 0:
        raise OutOfRange("both factors must be nonempty")
    if g.n * h.n > max_vertices:
        raise TooLarge(f"product has {g.n * h.n} vertices, cap is {max_vertices}")
    nh = h.n
    edges = []
    for a in range(g.n):
        for b1, b2 in h.edges:
            edges.append((a * nh + b1, a * nh + b2))
    for a1, a2 in g.edges:
        for b in range(nh):
            edges.append((a1 * nh + b, a2 * nh + b))
    return build_graph(g.n * nh, edges)


# ---------------------------------------------------------------------------
# Structural profile


@dataclass(frozen=True)
class StructuralProfile:
    components: tuple[frozenset[int], ...]
    leaves: frozenset[int]
    girth: float  # int, or math.inf for forests
    longest_induced_cycle: int  # 0 for forests
    is_unicyclic: bool
    max_degree: int
    degree3_vertices: frozenset[int]
    longest_induced_cycle_exact: bool = True


def girth(g: Graph) -> float:
    """Length of a shortest cycle (BFS from every vertex), ``inf`` if acyclic."""
    best = INF
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in bits(adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def longest_induced_cycle(g: Graph, node_budget: int = DEFAULT_CYCLE_BUDGET) -> tuple[int, tuple[int, ...]]:
    """Exhaustive search over induced paths.

    Each cycle is grown from its smallest vertex ``s``.  A path
    ``s, p1, ..., pk`` may be extended by ``w`` only when ``w`` is adjacent to
    ``pk`` and to none of ``p1..p(k-1)``; if ``w`` is also adjacent to ``s`` the
    path closes into an induced cycle instead.  Returns ``(length, cycle)``;
    on budget exhaustion raises :class:`BudgetExceeded` whose ``partial`` is
    the best ``(length, cycle)`` found so far.
    """
    adj = g.adj
    best: tuple[int, ...] = ()
    nodes = 0
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        if (adj[s] & higher).bit_count() < 2:
            continue
        # (path, on_path mask, neighbors of interior vertices p1..p(k-1))
        stack = [((s, p1), 1 << s | 1 << p1, 0) for p1 in reversed(list(bits(adj[s] & higher)))]
        while stack:
            path, on_path, blocked = stack.pop()
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded("induced cycle search exceeded its node budget", (len(best), best))
            last = path[-1]
            cand = adj[last] & higher & ~on_path & ~blocked
            if not cand:
                continue
            grown = blocked | adj[last]
            for w in bits(cand):
                if adj[w] >> s & 1:
                    if len(path) + 1 > len(best):
                        best = path + (w,)
                else:
                    stack.append((path + (w,), on_path | 1 << w, grown))
    return len(best), best


def structural_profile(g: Graph, node_budget: int = DEFAULT_CYCLE_BUDGET) -> StructuralProfile:
    degrees = g.degrees
    leaves = frozenset(v for v in range(g.n) if degrees[v] == 1)
    gir = girth(g)
    exact = True
    try:
        lic = longest_induced_cycle(g, node_budget)[0] if gir != INF else 0
    except BudgetExceeded as exc:
        lic, exact = exc.partial[0], False
    prof = StructuralProfile(
        components=g.components,
        leaves=leaves,
        girth=gir,
        longest_induced_cycle=lic,
        is_unicyclic=g.n > 0 and g.is_connected() and g.m == g.n,
        max_degree=max(degrees, default=0),
        degree3_vertices=frozenset(v for v in range(g.n) if degrees[v] == 3),
        longest_induced_cycle_exact=exact,
    )
    if not exact:
        raise BudgetExceeded("longest induced cycle search exceeded its node budget", prof)
    return prof


# ---------------------------------------------------------------------------
# Orientations


@dataclass(frozen=True)
class Orientation:
    base: Graph
    dirs: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.dirs) != self.base.m:
            raise DirLengthMismatch(f"expected {self.base.m} direction bits, got {len(self.dirs)}")

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) if d == 0 else (v, u) for (u, v), d in zip(self.base.edges, self.dirs))

    @cached_property
    def _masks(self):
        out = [0] * self.n
        inn = [0] * self.n
        for a, b in self.arcs:
            out[a] |= 1 << b
            inn[b] |= 1 << a
        return tuple(out), tuple(inn)

    @property
    def out_masks(self) -> tuple[int, ...]:
        return self._masks[0]

    @property
    def in_masks(self) -> tuple[int, ...]:
        return self._masks[1]

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.out_masks[v]))

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.in_masks[v]))

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def has_arc(self, a: int, b: int) -> bool:
        return bool(self.out_masks[a] >> b & 1)

    @property
    def dir_string(self) -> str:
        return "".join(map(str, self.dirs))

    def reversed(self) -> Orientation:
        return Orientation(self.base, tuple(1 - d for d in self.dirs))

    def to_dot(self, highlight: Iterable[int] = (), name: str = "G") -> str:
        hl = set(highlight)
        lines = [f"digraph {name} {{"]
        for v in range(self.n):
            if v in hl:
                lines.append(f'  {v} [style=filled, fillcolor=gray];')
            else:
                lines.append(f"  {v};")
        for a, b in self.arcs:
            lines.append(f"  {a} -> {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def orient(g: Graph, dirs: Sequence[int]) -> Orientation:
    dirs = tuple(int(d) for d in dirs)
    if len(dirs) != g.m:
        raise DirLengthMismatch(f"expected {g.m} direction bits, got {len(dirs)}")
    if any(d not in (0, 1) for d in dirs):
        raise ValueError("direction bits must be 0 or 1")
    return Orientation(g, dirs)


def orientation_from_arcs(g: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
    """Orientation whose arc set is exactly ``arcs`` (one arc per edge)."""
    dirs = [None] * g.m
    index = g.edge_index
    for a, b in arcs:
        if a < b:
            i, d = index.get((a, b)), 0
        else:
            i, d = index.get((b, a)), 1
        if i is None:
            raise InvalidEdge(f"arc ({a}, {b}) is not an edge")
        if dirs[i] is not None and dirs[i] != d:
            raise DuplicateEdge(f"edge {g.edges[i]} oriented both ways")
        dirs[i] = d
    missing = [g.edges[i] for i, d in enumerate(dirs) if d is None]
    if missing:
        raise DirLengthMismatch(f"edges left unoriented: {missing[:5]}")
    return Orientation(g, tuple(dirs))


def is_valid(o: Orientation) -> bool:
    """True iff every vertex has at least one in-neighbor."""
    return all(o.in_masks)


def zero_in_degree_vertex(o: Orientation) -> int | None:
    for v, m in enumerate(o.in_masks):
        if not m:
            return v
    return None
