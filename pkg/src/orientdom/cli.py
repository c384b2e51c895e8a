"""Command-line interface.

Graphs come from ``--graph6 STR``, ``--file PATH`` (graph6 or ``n m`` edge
list, decided by the first line) or ``--family SPEC``.  Family specs use
``name:p1,p2`` (``grid:6,8``, ``familyF:4,3``, ``cycle:3*cycle:3``).

Exit codes: 0 ok / verified, 1 refuted, 2 usage, 3 budget exceeded, 4 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from . import harness
from .constructions import CONSTRUCTIONS, construct, predicted
from .corpus import parse_corpus
from .errors import (
    BudgetExceeded,
    NoTheoremApplies,
    OrientDomError,
    TooManyOrientations,
    UnknownCheck,
)
from .families import FAMILY_KINDS, make_family, parse_family
from .graph import Graph, Orientation, orient, orientation_from_arcs, parse_edge_list
from .graph6 import encode_graph6, parse_graph6
from .optimizer import DEFAULT_EDGE_CAP, DEFAULT_NODE_BUDGET, DOM, DOM_t, ExtremumReport, Spectrum, dom_t, td_spectrum
from .solver import gamma, gamma_t

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3, 4
SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Input


def load_graph(args) -> tuple[Graph, object]:
    """Return ``(graph, family spec or None)`` from whichever input flag was given."""
    given = [x for x in (args.graph6, args.file, args.family) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph6, --file, --family")
    if args.graph6 is not None:
        return parse_graph6(args.graph6), None
    if args.family is not None:
        spec = parse_family(args.family)
        return make_family(spec), spec
    with open(args.file, encoding="ascii", errors="replace") as fh:
        text = fh.read()
    first = text.strip().splitlines()[0] if text.strip() else ""
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return parse_edge_list(text), None
    return parse_graph6(first), None


def _parse_arcs(text: str):
    arcs = []
    for tok in text.replace(";", ",").split(","):
        tok = tok.strip()
        if not tok:
            continue
        a, sep, b = tok.partition(">")
        if not sep:
            raise UsageError(f"arc {tok!r} must look like 'u>v'")
        arcs.append((int(a), int(b)))
    return arcs


# ---------------------------------------------------------------------------
# Output


def _anchor(spec, quantity):
    if spec is None:
        return None
    try:
        preds = predicted(spec, quantity)
    except (NoTheoremApplies, OrientDomError):
        return None
    return "; ".join(f"{p} ({p.claim})" if p.claim else str(p) for p in preds)


def _witness(o: Orientation, td_set) -> dict:
    return {"graph6": encode_graph6(o.base), "dirBits": o.dir_string, "tdSet": sorted(td_set)}


def report_dict(result, timing: bool = True, anchor: str | None = None) -> dict:
    """JSON-ready form of an extremum report, spectrum, solve result or construction."""
    if isinstance(result, ExtremumReport):
        label = "exact" if result.exact else ("upper bound" if result.quantity == "dom_t" else "lower bound")
        return {
            "schemaVersion": SCHEMA_VERSION,
            "quantity": result.quantity,
            "value": result.value,
            "exact": result.exact,
            "valueKind": label,
            "witness": _witness(result.witness, result.cert.set),
            "stats": {
                "nodes": result.nodes,
                "orientations": result.orientations_considered,
                "pruned": result.pruned_subtrees,
                "elapsedMs": round(result.elapsed * 1000, 3) if timing else None,
            },
            "anchor": anchor,
        }
    if isinstance(result, Spectrum):
        return {
            "schemaVersion": SCHEMA_VERSION,
            "quantity": "spectrum",
            "values": list(result.values),
            "contiguous": result.contiguous,
            "exact": result.exact,
            "witnesses": {str(k): _witness(w, ())["dirBits"] for k, w in result.witnesses.items()},
            "graph6": encode_graph6(next(iter(result.witnesses.values())).base) if result.witnesses else None,
            "stats": {
                "orientations": result.orientations_considered,
                "pruned": result.pruned_subtrees,
                "elapsedMs": round(result.elapsed * 1000, 3) if timing else None,
            },
            "anchor": anchor,
        }
    return result


def _text_table(d: dict, prefix: str = "") -> list[str]:
    rows = []
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            rows += _text_table(v, key + ".")
        else:
            if isinstance(v, (list, tuple)):
                v = " ".join(map(str, v))
            rows.append(f"{key:<24} {v}")
    return rows


def emit_report(result, fmt: str = "json", timing: bool = True, anchor: str | None = None, highlight=None) -> bytes:
    """Serialize a result.  ``dot`` needs an orientation (and optional highlight set)."""
    if fmt == "dot":
        if isinstance(result, ExtremumReport):
            return result.witness.to_dot(sorted(result.cert.set), result.quantity).encode()
        if isinstance(result, Orientation):
            return result.to_dot(sorted(highlight or ())).encode()
        raise UsageError("dot output needs an orientation")
    d = report_dict(result, timing, anchor)
    if fmt == "json":
        return (json.dumps(d, indent=2) + "\n").encode()
    if fmt == "text":
        return ("\n".join(_text_table(d)) + "\n").encode()
    raise UsageError(f"unknown format {fmt!r}")


def _write(data: bytes):
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


# ---------------------------------------------------------------------------
# Subcommands


def cmd_solve(args) -> int:
    g, _ = load_graph(args)
    if (args.dirs is None) == (args.arcs is None):
        raise UsageError("solve needs exactly one of --dirs or --arcs")
    if args.dirs is not None:
        if any(c not in "01" for c in args.dirs):
            raise UsageError("--dirs must be a string of 0/1")
        o = orient(g, [int(c) for c in args.dirs])
    else:
        o = orientation_from_arcs(g, _parse_arcs(args.arcs))
    t0 = time.perf_counter()
    sol = gamma(o) if args.quantity == "gamma" else gamma_t(o)
    elapsed = time.perf_counter() - t0
    if args.format == "dot":
        _write(o.to_dot(sorted(sol.cert.set)).encode())
        return EXIT_OK
    d = {
        "schemaVersion": SCHEMA_VERSION,
        "quantity": args.quantity,
        "value": sol.value,
        "exact": True,
        "witness": {"graph6": encode_graph6(g), "dirBits": o.dir_string, "tdSet": sol.cert.sorted_set()},
        "dominators": {str(k): v for k, v in sorted(sol.cert.dominator_of.items())},
        "stats": {
            "nodes": sol.stats.nodes_explored,
            "forced": sol.stats.forced_vertices,
            "elapsedMs": round(elapsed * 1000, 3) if not args.no_timing else None,
        },
        "anchor": None,
    }
    _write(emit_report(d, args.format))
    return EXIT_OK


def _extremum(args, fn, quantity) -> int:
    g, spec = load_graph(args)
    kwargs = dict(edge_cap=args.edge_cap, node_budget=args.node_budget, workers=args.workers)
    anchor = _anchor(spec, quantity)
    try:
        rep = fn(g, **kwargs)
        code = EXIT_OK
    except BudgetExceeded as exc:
        if exc.partial is None:
            raise
        rep, code = exc.partial, EXIT_BUDGET
        print(f"error: {exc}", file=sys.stderr)
    _write(emit_report(rep, args.format, not args.no_timing, anchor))
    return code


def cmd_domt(args) -> int:
    return _extremum(args, dom_t, "dom_t")


def cmd_DOMT(args) -> int:
    return _extremum(args, DOM_t, "DOM_t")


def cmd_DOM(args) -> int:
    return _extremum(args, DOM, "DOM")


def cmd_spectrum(args) -> int:
    g, _ = load_graph(args)
    try:
        spec = td_spectrum(g, edge_cap=args.edge_cap, node_budget=args.node_budget, workers=args.workers)
        code = EXIT_OK
    except BudgetExceeded as exc:
        if exc.partial is None:
            raise
        spec, code = exc.partial, EXIT_BUDGET
        print(f"error: {exc}", file=sys.stderr)
    if args.format == "dot":
        raise UsageError("spectrum has no dot form")
    _write(emit_report(spec, args.format, not args.no_timing))
    return code


def cmd_construct(args) -> int:
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise UsageError("construction parameters must be integers") from None
    r = construct(args.name, params)
    o = r.orientation
    if args.format == "dot":
        _write(o.to_dot(sorted(r.candidate_set), r.name.replace("-", "_")).encode())
        return EXIT_OK
    d = {
        "schemaVersion": SCHEMA_VERSION,
        "construction": r.name,
        "params": params,
        "graph6": encode_graph6(r.graph),
        "dirBits": o.dir_string,
        "arcs": [list(a) for a in o.arcs],
        "candidateSet": sorted(r.candidate_set),
        "candidateSize": len(r.candidate_set),
        "predicted": [{"quantity": p.quantity, "relation": p.relation, "bound": p.bound, "claim": p.claim} for p in r.predicted],
        "notes": list(r.notes),
    }
    if args.format == "text":
        rows = _text_table({k: v for k, v in d.items() if k not in ("arcs", "predicted")})
        rows += [f"{'predicted':<24} {p}" for p in r.predicted]
        _write(("\n".join(rows) + "\n").encode())
    else:
        _write((json.dumps(d, indent=2) + "\n").encode())
    return EXIT_OK


def _budget(args) -> harness.Budget:
    return harness.Budget(node_budget=args.node_budget)


def _write_counterexamples(outcomes, out_dir: str) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for k, o in enumerate(outcomes):
        path = os.path.join(out_dir, f"counterexample-{o.check_id}-{k}.json")
        with open(path, "w") as fh:
            fh.write(o.to_json() + "\n")
        paths.append(path)
    return paths


def cmd_verify(args) -> int:
    budget = _budget(args)
    target = None
    if args.corpus:
        target = parse_corpus(args.corpus)
    elif any(x is not None for x in (args.graph6, args.file, args.family)):
        target, _ = load_graph(args)
    outs = harness.run_check(args.check_id, target, budget)
    for o in outs:
        if args.format == "text":
            line = f"{o.status:<9} {o.check_id:<30} {o.target:<16} {o.detail}"
            _write((line + "\n").encode())
        else:
            _write((o.to_json() + "\n").encode())
    refuted = [o for o in outs if o.status == "refuted"]
    if refuted:
        for p in _write_counterexamples(refuted, args.output_dir or "."):
            print(f"counterexample written to {p}", file=sys.stderr)
        return EXIT_REFUTED
    if any(o.reason == "budget" for o in outs):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_scan(args) -> int:
    corpus = parse_corpus(args.corpus)
    ids = [c for c in args.checks.split(",") if c] if args.checks else None
    out_dir = args.output_dir
    output = cursor = None
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        output = os.path.join(out_dir, "outcomes.jsonl")
        cursor = os.path.join(out_dir, "cursor.json")
        if not args.resume and os.path.exists(cursor):
            os.remove(cursor)
    summary = None
    for item in harness.scan(corpus, ids, _budget(args), output, cursor, workers=args.workers or 1, halt_on_refute=args.halt):
        if isinstance(item, harness.ScanSummary):
            summary = item
        elif args.format == "text" and item.status != "skipped":
            _write(f"{item.status:<9} {item.check_id:<30} {item.target:<16} {item.detail}\n".encode())
        elif args.format == "json":
            _write((item.to_json() + "\n").encode())
    _write((summary.to_json() + "\n").encode())
    if summary.refutations:
        if out_dir:
            path = os.path.join(out_dir, "refutations.json")
            with open(path, "w") as fh:
                json.dump(summary.refutations, fh, indent=2)
            print(f"{len(summary.refutations)} refutation(s) written to {path}", file=sys.stderr)
        return EXIT_REFUTED
    return EXIT_OK


def cmd_families(args) -> int:
    lines = [f"{k}" for k in FAMILY_KINDS]
    lines.append("")
    lines.append("grammar: name:p1,p2   product: A*B   e.g. grid:6,8  familyF:4,3  cycle:3*cycle:3")
    lines.append("constructions: " + ", ".join(CONSTRUCTIONS))
    _write(("\n".join(lines) + "\n").encode())
    return EXIT_OK


def cmd_checks(args) -> int:
    rows = harness.list_checks()
    if args.format == "json":
        _write((json.dumps([{"checkId": c, "description": d, "anchor": a} for c, d, a in rows], indent=2) + "\n").encode())
    else:
        _write(("\n".join(f"{c:<30} {d}" for c, d, _ in rows) + "\n").encode())
    return EXIT_OK


# ---------------------------------------------------------------------------


def _env_int(name, default):
    val = os.environ.get(name)
    return int(val) if val else default


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph6", help="graph in graph6 format")
    common.add_argument("--file", help="graph6 or edge-list file (sniffed by first line)")
    common.add_argument("--family", help="family spec, e.g. grid:6,8 or familyF:4,3 or cycle:3*cycle:3")
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("--workers", type=int, default=None, help="worker processes (default: ORIENTDOM_WORKERS or CPU count)")
    common.add_argument("--edge-cap", type=int, default=None, help="refuse graphs with more edges (default 30)")
    common.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--output-dir", default=None)
    common.add_argument("--no-timing", action="store_true", help="omit elapsed times so output is byte-stable")

    p = argparse.ArgumentParser(prog="orientdom", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"orientdom {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="gamma_t or gamma of one orientation")
    s.add_argument("--dirs", help="direction bits, one per edge in canonical order (0 = low->high)")
    s.add_argument("--arcs", help="arc list 'u>v,u>v,...'")
    s.add_argument("--quantity", choices=("gamma_t", "gamma"), default="gamma_t")
    s.set_defaults(func=cmd_solve)

    for name, fn, helptext in (
        ("domt", cmd_domt, "minimum gamma_t over valid orientations"),
        ("DOMT", cmd_DOMT, "maximum gamma_t over valid orientations"),
        ("DOM", cmd_DOM, "maximum gamma over all orientations"),
        ("spectrum", cmd_spectrum, "all gamma_t values over valid orientations"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.set_defaults(func=fn)

    s = sub.add_parser("construct", parents=[common], help="build a named orientation: " + ", ".join(CONSTRUCTIONS))
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", parents=[common], help="run one registered check")
    s.add_argument("check_id")
    s.add_argument("--corpus", help="exhaustive:N, exhaustive:A..B, graph6:PATH or family:SWEEP")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", parents=[common], help="run checks over a corpus")
    s.add_argument("corpus", help="exhaustive:N, exhaustive:A..B, graph6:PATH or family:SWEEP")
    s.add_argument("--checks", help="comma-separated check ids (default: all)")
    s.add_argument("--resume", action="store_true", help="continue from the cursor in --output-dir")
    s.add_argument("--halt", action="store_true", help="stop at the first refutation")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("families", parents=[common], help="list graph families")
    s.set_defaults(func=cmd_families)
    s = sub.add_parser("checks", parents=[common], help="list registered checks")
    s.set_defaults(func=cmd_checks)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.workers is None:
        args.workers = _env_int("ORIENTDOM_WORKERS", os.cpu_count() or 1)
    if args.workers < 1 or args.node_budget < 1:
        print("error: --workers and --node-budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.edge_cap is None:
        args.edge_cap = _env_int("ORIENTDOM_EDGE_CAP", DEFAULT_EDGE_CAP)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownCheck as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, TooManyOrientations) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OrientDomError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
