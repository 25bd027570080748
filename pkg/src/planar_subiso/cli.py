"""Command-line front end.

Exit codes: 0 success (or "found" for ``decide``), 1 "not found" for
``decide``, 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import generators, oracle
from .bench import doubling_ratios, grid_scaling
from .driver import planar_subgraph_iso
from .graph_io import FormatError, format_g, format_pg, read_graph
from .noose import enumerate_nooses, unoriented_classes
from .pattern_embed import enumerate_embeddings
from .plane_graph import AbstractGraph, PlaneGraph, PlaneGraphError, planar_embed
from .sphere_cut import sc_decomposition

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _abstract(g: AbstractGraph | PlaneGraph) -> AbstractGraph:
    return g.graph if isinstance(g, PlaneGraph) else g


def _plane(g: AbstractGraph | PlaneGraph) -> PlaneGraph:
    return g if isinstance(g, PlaneGraph) else planar_embed(g)


def _load_host(args: argparse.Namespace) -> AbstractGraph | PlaneGraph:
    if not args.host:
        raise UsageError("--host is required")
    return read_graph(args.host, embedded=True if args.embedded else None)


def _load_pattern(args: argparse.Namespace) -> AbstractGraph | PlaneGraph:
    if not args.pattern:
        raise UsageError("--pattern is required")
    return read_graph(args.pattern)


def _edge_line(es) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(es))


def _report(args: argparse.Namespace, mode: str, found: bool, count: int, sols, extra: dict) -> int:
    if args.json:
        payload: dict = {"schema": SCHEMA, **extra}
        if mode == "decide":
            payload["found"] = found
        elif mode == "count":
            payload["count"] = count
        else:
            payload["solutions"] = [sorted(map(list, es)) for es in sols]
        _emit(args, json.dumps(payload, sort_keys=True))
    elif mode == "decide":
        _emit(args, "true" if found else "false")
    elif mode == "count":
        _emit(args, str(count))
    else:
        _emit(args, "".join(_edge_line(es) + "\n" for es in sols) or "\n")
    return 0 if (mode != "decide" or found) else 1


def cmd_solve(args: argparse.Namespace) -> int:
    host = _load_host(args)
    pattern = _abstract(_load_pattern(args))
    t0 = time.perf_counter()
    r = planar_subgraph_iso(host, pattern, args.command, args.limit, schedule_seed=args.seed)
    extra = {"seconds": round(time.perf_counter() - t0, 6)} if args.json else {}
    if args.json and r.widths:
        extra["max_width"] = max(r.widths)
        extra["max_table"] = max(r.table_sizes)
    sols = sorted(r.solutions, key=sorted) if args.command == "list" else []
    return _report(args, args.command, r.found, r.count, sols, extra)


def cmd_oracle(args: argparse.Namespace) -> int:
    host = _abstract(_load_host(args))
    pattern = _abstract(_load_pattern(args))
    mode = args.mode
    if mode == "decide":
        return _report(args, mode, oracle.brute_decide(host, pattern), 0, [], {})
    recs = oracle.brute_list(host, pattern)
    sols = [r.edges for r in recs]
    if args.limit is not None:
        sols = sols[: args.limit]
    return _report(args, mode, bool(recs), len(recs), sols, {})


def cmd_scdecomp(args: argparse.Namespace) -> int:
    g = _plane(_load_host(args))
    scd = sc_decomposition(g, root_face=args.root_face)
    _emit(args, scd.to_dot() if args.dot else scd.to_json())
    return 0


def cmd_embeddings(args: argparse.Namespace) -> int:
    h = _abstract(_load_pattern(args))
    cat = enumerate_embeddings(h)
    parts = []
    for d, mirror in zip(cat.drawings, cat.mirror_self_equivalent):
        parts.append(f"# mirror-self-equivalent: {str(mirror).lower()}\n" + format_pg(d))
    parts.append(f"# count {len(cat)}\n")
    _emit(args, "".join(parts))
    return 0


def cmd_nooses(args: argparse.Namespace) -> int:
    h = _plane(_load_pattern(args))
    max_len = args.max_len if args.max_len is not None else h.n
    found = enumerate_nooses(h, max_len)
    lines = []
    if args.json:
        for c in sorted(found, key=lambda c: (len(c), c.vertices, c.faces)):
            lines.append(json.dumps({"vertices": list(c.vertices), "faces": list(c.faces)}))
    summary = {"schema": SCHEMA, "oriented": len(found), "unoriented": len(unoriented_classes(found))}
    lines.append(json.dumps(summary, sort_keys=True) if args.json else f"{len(found)}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    g = generators.generate(args.kind, args.size, args.seed or 0)
    out = args.out
    text = format_g(g.graph) if (args.abstract or (out and out.endswith(".g"))) else format_pg(g)
    _emit(args, text)
    return 0


def _bench_pattern(name: str) -> PlaneGraph:
    if name.startswith("c") and name[1:].isdigit():
        return generators.cycle(int(name[1:]))
    if name.startswith("p") and name[1:].isdigit():
        return generators.path(int(name[1:]))
    raise UsageError(f"unknown bench pattern {name!r}")


def cmd_bench(args: argparse.Namespace) -> int:
    runs = grid_scaling(_bench_pattern(args.bench_pattern), args.sizes, args.repeats)
    ratios = doubling_ratios(runs)
    if args.json:
        rows = [{"n": r.n, "grid": list(r.shape), "median_seconds": r.median, "count": r.count} for r in runs]
        payload = {"schema": SCHEMA, "pattern": args.bench_pattern, "runs": rows, "doubling_ratios": ratios}
        _emit(args, json.dumps(payload, sort_keys=True))
    else:
        lines = [f"n={r.n:>6} grid={r.shape[0]}x{r.shape[1]} median={r.median:.4f}s count={r.count}" for r in runs]
        lines += [f"ratio {runs[i].n}->{runs[i + 1].n}: {q:.3f}" for i, q in enumerate(ratios)]
        _emit(args, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar-subiso", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--host")
    common.add_argument("--pattern")
    common.add_argument("--embedded", action="store_true", help="host file is in .pg rotation format")
    common.add_argument("--limit", type=int)
    common.add_argument("--json", action="store_true")
    common.add_argument("--seed", type=int)
    common.add_argument("--out")
    common.add_argument("--threads", type=int, default=1, help="worker cap (chunks run sequentially)")
    sub = p.add_subparsers(dest="command", required=True)
    for mode in ("decide", "count", "list"):
        sub.add_parser(mode, parents=[common]).set_defaults(func=cmd_solve)
    sp = sub.add_parser("oracle", parents=[common])
    sp.add_argument("mode", choices=["decide", "count", "list"])
    sp.set_defaults(func=cmd_oracle)
    sp = sub.add_parser("scdecomp", parents=[common])
    sp.add_argument("--root-face", type=int, default=0)
    sp.add_argument("--dot", action="store_true")
    sp.set_defaults(func=cmd_scdecomp)
    sub.add_parser("embeddings", parents=[common]).set_defaults(func=cmd_embeddings)
    sp = sub.add_parser("nooses", parents=[common])
    sp.add_argument("--max-len", type=int)
    sp.set_defaults(func=cmd_nooses)
    sp = sub.add_parser("gen", parents=[common])
    sp.add_argument("kind", choices=["grid", "random-planar", "cycle", "wheel"])
    sp.add_argument("size", type=int)
    sp.add_argument("--abstract", action="store_true", help="write the .g format")
    sp.set_defaults(func=cmd_gen)
    sp = sub.add_parser("bench", parents=[common])
    sp.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400, 800])
    sp.add_argument("--repeats", type=int, default=5)
    sp.add_argument("--bench-pattern", default="c4")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.limit is not None and args.limit < 0:
        print("error: --limit must be non-negative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, FormatError, PlaneGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
