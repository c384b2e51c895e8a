"""Graph corpora: exhaustive small connected graphs, graph6 files, family sweeps.

Exhaustive generation grows connected graphs one vertex at a time (every
connected graph has a vertex whose removal keeps it connected) and keeps one
representative per canonical form.  The canonical form is the lexicographically
largest upper-triangle bit string over all vertex orders that respect a
colour-refinement partition, so it is exact, if slow for large regular graphs.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import InvalidFamilyParams, ParseError
from .families import FamilySpec, make_family, parse_family
from .graph import Graph, build_graph, girth
from .graph6 import encode_graph6, parse_graph6

DEFAULT_MAX_N = 7


# ---------------------------------------------------------------------------
# Canonical form


def _refine(n: int, adj) -> list[list[int]]:
    """Ordered equitable partition by iterated neighbour-colour counts."""
    colour = [adj[v].bit_count() for v in range(n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in range(n) if adj[v] >> w & 1))) for v in range(n)]
        keys = sorted(set(sig))
        new = [keys.index(s) for s in sig]
        if len(keys) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: list[list[int]] = [[] for _ in range(max(colour) + 1)] if n else []
    for v in range(n):
        cells[colour[v]].append(v)
    return cells


def _code(order, adj) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_code(g: Graph) -> tuple[int, int]:
    """``(n, code)`` equal for two graphs iff they are isomorphic."""
    n, adj = g.n, g.adj
    if n <= 1:
        return (n, 0)
    cells = _refine(n, adj)
    best = -1
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        c = _code(order, adj)
        if c > best:
            best = c
    return (n, best)


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class with the canonical labelling."""
    n, code = canonical_code(g)
    edges = []
    k = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                edges.append((i, j))
            k -= 1
    return build_graph(n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_code(g) == canonical_code(h)


# ---------------------------------------------------------------------------
# Exhaustive connected graphs


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class of connected graphs on ``n`` vertices.

    Ordered by edge count, then canonical code.
    """
    if n <= 0:
        return ()
    if n == 1:
        return (build_graph(1, []),)
    seen: dict[tuple[int, int], Graph] = {}
    for base in connected_graphs(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            edges = list(base.edges) + [(u, n - 1) for u in range(n - 1) if nbrs >> u & 1]
            g = build_graph(n, edges)
            key = canonical_code(g)
            if key not in seen:
                seen[key] = canonical_graph(g)
    return tuple(sorted(seen.values(), key=lambda g: (g.m, canonical_code(g)[1])))


# ---------------------------------------------------------------------------
# Structural predicates


def is_unicyclic(g: Graph) -> bool:
    return g.is_connected() and g.m == g.n and g.n >= 3


def in_family_f(g: Graph) -> bool:
    """A cycle with one pendant path of at least one edge, identified at a path end."""
    if not is_unicyclic(g):
        return False
    deg = g.degrees
    leaves = [v for v in range(g.n) if deg[v] == 1]
    if len(leaves) != 1 or max(deg) != 3:
        return False
    return sum(1 for d in deg if d == 3) == 1 and all(d <= 3 for d in deg)


def is_cycle_with_leaves(g: Graph) -> bool:
    """Unicyclic with every vertex off the cycle a leaf adjacent to the cycle."""
    if not is_unicyclic(g):
        return False
    # strip leaves once; the rest must be a cycle
    core = [v for v in range(g.n) if g.degrees[v] > 1]
    h = g.induced_subgraph(core)
    return h.m == h.n and all(d == 2 for d in h.degrees)


# ---------------------------------------------------------------------------
# Corpus description


@dataclass(frozen=True)
class CorpusItem:
    index: int
    label: str
    graph: Graph | None
    error: ParseError | None = None


@dataclass(frozen=True)
class Corpus:
    """A stream of graphs plus filters.

    ``source`` is ``"exhaustive"`` (connected graphs with ``min_n..max_n``
    vertices), ``"graph6"`` (one graph per line of ``path``) or ``"family"``
    (every instance of ``families``).
    """

    source: str = "exhaustive"
    max_n: int = DEFAULT_MAX_N
    min_n: int = 1
    path: str | None = None
    families: tuple[FamilySpec, ...] = ()
    connected: bool = False
    in_c: bool = False
    girth_at_least: int | None = None
    max_edges: int | None = None
    label: str = field(default="", compare=False)

    def accepts(self, g: Graph) -> bool:
        if self.connected and not g.is_connected():
            return False
        if self.in_c and not g.in_class_c():
            return False
        if self.girth_at_least is not None and girth(g) < self.girth_at_least:
            return False
        if self.max_edges is not None and g.m > self.max_edges:
            return False
        return True

    def _raw(self) -> Iterator[tuple[str, Graph | None, ParseError | None]]:
        if self.source == "exhaustive":
            for n in range(max(1, self.min_n), self.max_n + 1):
                for g in connected_graphs(n):
                    yield encode_graph6(g), g, None
        elif self.source == "graph6":
            with open(self.path, encoding="ascii", errors="replace") as fh:
                for lineno, line in enumerate(fh, 1):
                    text = line.strip()
                    if not text or text.startswith(">>graph6<<") and len(text) == 10:
                        continue
                    try:
                        yield text, parse_graph6(text), None
                    except ParseError as exc:
                        yield f"line {lineno}: {text}", None, exc
        elif self.source == "family":
            for spec in self.families:
                yield str(spec), make_family(spec), None
        else:
            raise ValueError(f"unknown corpus source {self.source!r}")

    def items(self, start: int = 0) -> Iterator[CorpusItem]:
        """Filtered items; ``index`` counts raw entries so cursors survive filter changes."""
        for idx, (label, g, err) in enumerate(self._raw()):
            if idx < start:
                continue
            if g is not None and not self.accepts(g):
                continue
            yield CorpusItem(idx, label, g, err)

    def graphs(self) -> Iterator[Graph]:
        for item in self.items():
            if item.graph is not None:
                yield item.graph

    def describe(self) -> str:
        if self.label:
            return self.label
        if self.source == "exhaustive":
            return f"exhaustive:{self.min_n}..{self.max_n}"
        if self.source == "graph6":
            return f"graph6:{self.path}"
        return "family:" + ";".join(str(f) for f in self.families)


def exhaustive(max_n: int = DEFAULT_MAX_N, min_n: int = 1, **filters) -> Corpus:
    return Corpus("exhaustive", max_n=max_n, min_n=min_n, **filters)


def graph6_file(path: str, **filters) -> Corpus:
    return Corpus("graph6", path=path, **filters)


_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def family_sweep(text: str, **filters) -> Corpus:
    """Expand ``kind:a..b,c`` style ranges (``;`` separates several sweeps)."""
    specs: list[FamilySpec] = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        name, _, rest = part.partition(":")
        choices = []
        for tok in rest.split(",") if rest else []:
            tok = tok.strip()
            m = _RANGE.match(tok)
            if m:
                lo, hi = int(m.group(1)), int(m.group(2))
                if hi < lo:
                    raise InvalidFamilyParams(f"empty range {tok!r}")
                choices.append([str(x) for x in range(lo, hi + 1)])
            else:
                choices.append([tok])
        for combo in itertools.product(*choices):
            specs.append(parse_family(f"{name}:{','.join(combo)}" if combo else name))
    return Corpus("family", families=tuple(specs), **filters)


def parse_corpus(text: str, **filters) -> Corpus:
    """``exhaustive:N`` / ``exhaustive:A..B`` / ``graph6:PATH`` / ``family:SWEEP``."""
    kind, _, rest = text.partition(":")
    if kind == "exhaustive":
        m = _RANGE.match(rest)
        if m:
            return exhaustive(int(m.group(2)), int(m.group(1)), **filters)
        return exhaustive(int(rest) if rest else DEFAULT_MAX_N, **filters)
    if kind == "graph6":
        return graph6_file(rest, **filters)
    if kind == "family":
        return family_sweep(rest, **filters)
    raise InvalidFamilyParams(f"unknown corpus {text!r}; use exhaustive:N, graph6:PATH or family:SPEC")


# ---------------------------------------------------------------------------
# Tournaments


def tournaments(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All ``2^(n(n-1)/2)`` labelled tournaments as arc tuples."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits_ in range(1 << len(pairs)):
        yield tuple((u, v) if not bits_ >> i & 1 else (v, u) for i, (u, v) in enumerate(pairs))
