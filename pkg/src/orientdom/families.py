"""Named graph families with fixed, documented vertex numberings.

Numbering conventions (relied on by the constructions module):

* ``path(n)``: ``0 - 1 - ... - n-1``; ``cycle(n)`` adds ``(0, n-1)``.
* ``completeBipartite(m, n)``: ``x_1..x_m -> 0..m-1``, ``y_1..y_n -> m..m+n-1``.
* ``wheel(n)``: rim ``cycle(n)`` on ``0..n-1``, hub ``n``.
* ``grid(m, n)`` = ``P_m box P_n``: ``u_{i,j} -> (i-1)*n + (j-1)`` (row-major).
* ``ladder(m)`` = ``K_2 box P_m``: ``u_i -> i-1``, ``v_i -> m+i-1``.
* ``familyF(k, l)``: cycle ``0..k-1``, then path vertices ``k..k+l-2`` hanging
  off vertex 0 (``0 - k - k+1 - ...``).
* ``cycleWithLeaves(c_0, ..., c_{k-1})``: cycle on ``0..k-1``, then ``c_i``
  leaves on cycle vertex ``i``, numbered consecutively.
* ``cartesianProduct(A, B)``: vertex ``(a, b) -> a * n(B) + b``.

Family strings use the mini-grammar ``name:p1,p2`` (``grid:6,8``,
``familyF:4,3``); a product is written ``A*B`` (``cycle:3*cycle:3``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidFamilyParams
from .graph import Graph, build_graph, cartesian_product

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "completeBipartite",
    "wheel",
    "grid",
    "ladder",
    "familyF",
    "cycleWithLeaves",
    "cartesianProduct",
)

_ALIASES = {
    "K": "complete",
    "Kmn": "completeBipartite",
    "bipartite": "completeBipartite",
    "P": "path",
    "C": "cycle",
    "W": "wheel",
    "F": "familyF",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        _validate(self)

    def __str__(self) -> str:
        if self.kind == "cartesianProduct":
            return "*".join(str(f) for f in self.params)
        return f"{self.kind}:{','.join(map(str, self.params))}"


def _need(spec: FamilySpec, count: int):
    if len(spec.params) != count:
        raise InvalidFamilyParams(f"{spec.kind} takes {count} parameter(s), got {len(spec.params)}")
    if not all(isinstance(p, int) for p in spec.params):
        raise InvalidFamilyParams(f"{spec.kind} parameters must be integers")


def _validate(spec: FamilySpec):
    k, p = spec.kind, spec.params
    if k not in FAMILY_KINDS:
        raise InvalidFamilyParams(f"unknown family {k!r}")
    if k == "cartesianProduct":
        if len(p) != 2 or not all(isinstance(f, FamilySpec) for f in p):
            raise InvalidFamilyParams("cartesianProduct takes two family specs")
        return
    if k == "cycleWithLeaves":
        if len(p) < 3 or not all(isinstance(c, int) and c >= 0 for c in p):
            raise InvalidFamilyParams("cycleWithLeaves needs >= 3 non-negative leaf counts")
        return
    if k in ("path", "complete"):
        _need(spec, 1)
        if p[0] < 1:
            raise InvalidFamilyParams(f"{k} needs n >= 1")
    elif k == "cycle":
        _need(spec, 1)
        if p[0] < 3:
            raise InvalidFamilyParams("cycle needs n >= 3")
    elif k == "wheel":
        _need(spec, 1)
        if p[0] < 3:
            raise InvalidFamilyParams("wheel needs n >= 3")
    elif k == "completeBipartite":
        _need(spec, 2)
        if min(p) < 1:
            raise InvalidFamilyParams("completeBipartite needs m, n >= 1")
    elif k == "grid":
        _need(spec, 2)
        if min(p) < 1:
            raise InvalidFamilyParams("grid needs m, n >= 1")
    elif k == "ladder":
        _need(spec, 1)
        if p[0] < 1:
            raise InvalidFamilyParams("ladder needs m >= 1")
    elif k == "familyF":
        _need(spec, 2)
        if p[0] < 3 or p[1] < 2:
            raise InvalidFamilyParams("familyF needs k >= 3 and l >= 2")


def path(n: int) -> Graph:
    return make_family(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return make_family(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return make_family(FamilySpec("complete", (n,)))


def complete_bipartite(m: int, n: int) -> Graph:
    return make_family(FamilySpec("completeBipartite", (m, n)))


def wheel(n: int) -> Graph:
    return make_family(FamilySpec("wheel", (n,)))


def grid(m: int, n: int) -> Graph:
    return make_family(FamilySpec("grid", (m, n)))


def ladder(m: int) -> Graph:
    return make_family(FamilySpec("ladder", (m,)))


def family_f(k: int, l: int) -> Graph:
    return make_family(FamilySpec("familyF", (k, l)))


def cycle_with_leaves(counts) -> Graph:
    return make_family(FamilySpec("cycleWithLeaves", tuple(counts)))


def diamond() -> Graph:
    """K_4 minus the edge (2, 3)."""
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def make_family(spec: FamilySpec, max_vertices: int = 64) -> Graph:
    k, p = spec.kind, spec.params
    if k == "path":
        return build_graph(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if k == "cycle":
        n = p[0]
        return build_graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    if k == "complete":
        return build_graph(p[0], combinations(range(p[0]), 2))
    if k == "completeBipartite":
        m, n = p
        return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    if k == "wheel":
        n = p[0]
        rim = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        return build_graph(n + 1, rim + [(i, n) for i in range(n)])
    if k == "grid":
        return cartesian_product(path(p[0]), path(p[1]), max_vertices)
    if k == "ladder":
        return cartesian_product(path(2), path(p[0]), max_vertices)
    if k == "familyF":
        cyc, ell = p
        edges = [(i, i + 1) for i in range(cyc - 1)] + [(0, cyc - 1)]
        tail = [0] + list(range(cyc, cyc + ell - 1))
        edges += list(zip(tail, tail[1:]))
        return build_graph(cyc + ell - 1, edges)
    if k == "cycleWithLeaves":
        c = len(p)
        edges = [(i, i + 1) for i in range(c - 1)] + [(0, c - 1)]
        nxt = c
        for i, count in enumerate(p):
            for _ in range(count):
                edges.append((i, nxt))
                nxt += 1
        return build_graph(nxt, edges)
    if k == "cartesianProduct":
        return cartesian_product(make_family(p[0], max_vertices), make_family(p[1], max_vertices), max_vertices)
    raise InvalidFamilyParams(f"unknown family {k!r}")


def parse_family(text: str) -> FamilySpec:
    """Parse ``name:p1,p2`` (or ``A*B`` for a Cartesian product)."""
    text = text.strip()
    if "*" in text:
        parts = text.split("*")
        spec = parse_family(parts[0])
        for part in parts[1:]:
            spec = FamilySpec("cartesianProduct", (spec, parse_family(part)))
        return spec
    name, _, rest = text.partition(":")
    name = _ALIASES.get(name, name)
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip()) if rest else ()
    except ValueError:
        raise InvalidFamilyParams(f"non-integer parameter in {text!r}") from None
    return FamilySpec(name, params)
