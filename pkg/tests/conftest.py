from __future__ import annotations

import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from orientdom.graph import build_graph  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m if max_m is not None else len(pairs))) if pairs else []
    return build_graph(n, chosen)


@st.composite
def cyclic_graphs(draw, min_n=3, max_n=7, max_m=None):
    """Connected graphs with a cycle: a random spanning tree plus at least one chord."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    rest = sorted({(u, v) for v in range(n) for u in range(v)} - edges)
    room = len(rest) if max_m is None else max(0, max_m - len(edges))
    extra = draw(st.lists(st.sampled_from(rest), unique=True, min_size=1 if rest else 0, max_size=min(room, len(rest)) or 1)) if rest else []
    return build_graph(n, sorted(edges | set(extra)))


@st.composite
def orientations(draw, graph_strategy):
    from orientdom.graph import orient

    g = draw(graph_strategy)
    dirs = draw(st.lists(st.integers(0, 1), min_size=g.m, max_size=g.m))
    return orient(g, dirs)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        status, title, elapsed = mod.RESULTS[num]
        tr.write_line(f"criterion {num:>2}  {status}  {elapsed:7.1f}s  {title}")
