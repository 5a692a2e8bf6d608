"""Command-line front end.

Graph arguments are either an edge-list file or a family spec such as
``grid:3,3``, ``cycle5``, ``figure2`` or ``gadget:path3``. Exit status is 0 on
success, 1 when a verification or reproduction fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from pathlib import Path

from .edgelist import format_edgelist, read_edgelist
from .errors import CertificateError, EternalDominationError, FormatError
from .families import FAMILIES, generate_family
from .graphs import Digraph, Orientation, SimpleGraph, symmetric, triangulation_gadget
from .necoloring import ne_build, orientation_from_ne
from .orientations import PARAMETERS, optimal_orientations, search
from .reproduce import SUITES, failed, random_digraph, run_suite, write_csv
from .solver import MULTI, SINGLE, extract_strategy, solve
from .strategy import StrategyCertificate, verify_strategy

OK, FAILED, USAGE = 0, 1, 2

ALIASES = {"figure2": "figure2_counterexample", "king": "king_toroidal", "torus": "toroidal_grid",
           "bipartite": "complete_bipartite"}
SOLVE_MODES = {"gamma-inf": SINGLE, "gamma-inf-m": MULTI}
NE_FAMILIES = ("cycle3", "complete", "torus", "rook", "king", "hypergrid")


class UsageError(Exception):
    pass


# -- graph sources ----------------------------------------------------------------------


def parse_family_spec(spec: str) -> tuple[str, list[int]]:
    """``grid:3,3`` -> ("grid", [3, 3]); ``path3`` -> ("path", [3])."""
    if spec in ALIASES or spec in FAMILIES:
        return ALIASES.get(spec, spec), []
    if ":" in spec:
        name, _, rest = spec.partition(":")
        try:
            params = [int(p) for p in rest.split(",") if p.strip()]
        except ValueError:
            raise UsageError(f"bad parameters in {spec!r}") from None
    else:
        m = re.fullmatch(r"([a-z_]+?)(\d*)", spec)
        if not m:
            raise UsageError(f"cannot parse graph spec {spec!r}")
        name, digits = m.groups()
        params = [int(digits)] if digits else []
    return ALIASES.get(name, name), params


def graph_from_spec(spec: str) -> SimpleGraph:
    name, params = parse_family_spec(spec)
    if name == "gadget":
        raise UsageError("use gadget:<family spec>, e.g. gadget:path3")
    return generate_family(name, params)


def load_graph(source: str) -> SimpleGraph | Digraph:
    if Path(source).exists():
        return read_edgelist(source)
    if source.startswith("gadget:"):
        return triangulation_gadget(graph_from_spec(source[len("gadget:"):]))
    return graph_from_spec(source)


def _undirected(g: SimpleGraph | Digraph, source: str) -> SimpleGraph:
    if not isinstance(g, SimpleGraph):
        raise FormatError(f"{source} is a digraph; orientation search needs an undirected graph")
    return g


# -- output -------------------------------------------------------------------------------


def run_record(args, instance: str, parameter: str, value, wall_time: float, **extra) -> dict:
    rec = {
        "command": " ".join(args.argv),
        "instance": instance,
        "parameter": parameter,
        "value": value,
        "seed": args.seed,
        "wall_time": round(wall_time, 6),
    }
    rec.update(extra)
    return rec


def emit(args, rec: dict, text: str) -> None:
    print(json.dumps(rec, sort_keys=True) if args.json else text)


# -- commands -----------------------------------------------------------------------------


def cmd_gen(args) -> int:
    t = time.perf_counter()
    if args.family == "gadget":
        if not args.of:
            raise UsageError("gen gadget needs --of, e.g. --of path3")
        base = graph_from_spec(args.of)
        g, instance = triangulation_gadget(base), f"gadget:{args.of}"
    elif args.family == "random-digraph":
        if len(args.params) not in (1, 2):
            raise UsageError("random-digraph takes n and an optional arc probability")
        rng = random.Random(args.seed)
        p = float(args.params[1]) if len(args.params) == 2 else None
        g, instance = random_digraph(rng, int(args.params[0]), p), f"random-digraph:{','.join(args.params)}"
    else:
        name = ALIASES.get(args.family, args.family)
        try:
            params = [int(p) for p in args.params]
        except ValueError:
            raise UsageError("family parameters must be integers") from None
        g = generate_family(name, params)
        instance = f"{name}:{','.join(args.params)}" if params else name
    text = format_edgelist(g, comment=instance)
    if args.out:
        Path(args.out).write_text(text)
    elif not args.json:
        sys.stdout.write(text)
    n_edges = len(g.edges) if isinstance(g, SimpleGraph) else len(g.arcs)
    rec = run_record(args, instance, "n", g.n, time.perf_counter() - t, edges=n_edges, path=args.out)
    if args.json or args.out:
        emit(args, rec, f"wrote {instance} (n={g.n}, {n_edges} edges) to {args.out}")
    return OK


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    if isinstance(g, SimpleGraph):
        if not args.symmetric:
            raise FormatError(f"{args.graph} is undirected; pass --symmetric to use both arc directions")
        d = symmetric(g)
    else:
        d = g
    mode = SOLVE_MODES[args.parameter]
    t = time.perf_counter()
    res = solve(d, mode, cap=args.cap)
    wall = time.perf_counter() - t
    extra = {"lower_bound_used": res.lower_bound_used, "winning_configs": len(res.winning_family)}
    if args.emit_cert:
        cert = extract_strategy(d, res.winning_family, mode, label=f"{args.parameter} {args.graph}")
        Path(args.emit_cert).write_text(cert.dumps())
        extra["certificate"] = args.emit_cert
    emit(args, run_record(args, args.graph, args.parameter, res.value, wall, **extra),
         f"{args.parameter}({args.graph}) = {res.value}")
    return OK


def cmd_orient(args) -> int:
    g = _undirected(load_graph(args.graph), args.graph)
    sc = True if args.sc_only else None
    t = time.perf_counter()
    if args.all_orientations:
        res = optimal_orientations(g, args.parameter, dedup=not args.no_dedup,
                                   strongly_connected_only=bool(args.sc_only), cap=args.cap,
                                   workers=args.workers)
    else:
        res = search(g, args.parameter, dedup=not args.no_dedup, strongly_connected_only=sc,
                     cap=args.cap, workers=args.workers)
    wall = time.perf_counter() - t
    bits = res.best_orientation.bitstring() if res.best_orientation is not None else None
    extra = {"orientation_bits": bits}
    if args.workers == 1:
        # counts from parallel shards depend on scheduling, so only serial runs report them
        extra.update(examined=res.examined, pruned=res.pruned)
    if args.all_orientations:
        extra["optimal_orientations"] = [Orientation.from_mask(g, m).bitstring() for m in res.optimal_masks]
    text = f"{args.parameter}({args.graph}) = {res.value}"
    if bits is not None:
        text += f"  orientation {bits}"
    if args.all_orientations:
        text += f"  ({len(res.optimal_masks)} optimal{' orbits' if not args.no_dedup else ''})"
    emit(args, run_record(args, args.graph, args.parameter, res.value, wall, **extra), text)
    return OK


def cmd_verify(args) -> int:
    t = time.perf_counter()
    cert = StrategyCertificate.loads(Path(args.certificate).read_text())
    try:
        k = verify_strategy(cert)
    except CertificateError as exc:
        rec = run_record(args, args.certificate, cert.mode, None, time.perf_counter() - t,
                         accepted=False, reason=str(exc))
        emit(args, rec, f"REJECTED: {exc}")
        return FAILED
    rec = run_record(args, args.certificate, cert.mode, k, time.perf_counter() - t, accepted=True,
                     configs=len(cert.configs))
    emit(args, rec, f"ACCEPTED: {cert.mode} strategy with k={k} ({len(cert.configs)} configurations)")
    return OK


def cmd_necolor(args) -> int:
    t = time.perf_counter()
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise UsageError("coloring parameters must be integers") from None
    c = ne_build(args.family, *params)
    extra = {"coloring": c.to_json()}
    text = f"({c.k},{c.l}) NE coloring of {args.family} {' '.join(args.params)} on {c.graph.n} vertices"
    bound = None
    if c.l % 2 == 0:
        d, cert = orientation_from_ne(c)
        bound = verify_strategy(cert)
        text += f"; induced orientation certified oednm <= {bound}"
        if args.emit_cert:
            Path(args.emit_cert).write_text(cert.dumps())
            extra["certificate"] = args.emit_cert
    else:
        text += f"; l={c.l} is odd, so no Euler orientation is induced"
    rec = run_record(args, f"{args.family}:{','.join(args.params)}", "oednm_upper", bound,
                     time.perf_counter() - t, **extra)
    emit(args, rec, text)
    return OK


def cmd_reproduce(args) -> int:
    out = Path(args.out)
    t = time.perf_counter()

    def show(row) -> None:
        if not args.json:
            print(f"{row.status:8} {row.instance:40} {row.parameter:28} "
                  f"expected {row.paper_value_or_bounds:24} got {row.computed}", flush=True)

    rows = run_suite(args.suite, progress=show)
    path = out / f"reproduce_{args.suite}.csv"
    write_csv(rows, path)
    bad = failed(rows)
    counts = {s: sum(r.status == s for r in rows) for s in ("PASS", "FAIL", "SKIPPED", "INFO")}
    rec = run_record(args, f"suite:{args.suite}", "rows", len(rows), time.perf_counter() - t,
                     table=str(path), **{k.lower(): v for k, v in counts.items()})
    emit(args, rec, f"{len(rows)} rows ({counts}) written to {path}")
    return FAILED if bad else OK


# -- parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eternal-domination",
                                description="Exact eternal and m-eternal domination on digraphs and orientations.")
    p.add_argument("--json", action="store_true", help="print a JSON run record")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized generators")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a family member as an edge list")
    g.add_argument("family", help=f"one of {', '.join(FAMILIES)}, figure2, gadget, random-digraph")
    g.add_argument("params", nargs="*")
    g.add_argument("--of", help="base graph spec for the gadget, e.g. path3")
    g.add_argument("-o", "--out", help="output path (default: stdout)")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact (m-)eternal domination number of a digraph")
    s.add_argument("graph", help="edge-list file or family spec")
    s.add_argument("parameter", choices=sorted(SOLVE_MODES))
    s.add_argument("--symmetric", action="store_true", help="read an undirected graph as a symmetric digraph")
    s.add_argument("--emit-cert", metavar="PATH", help="write the winning strategy certificate")
    s.add_argument("--cap", type=int, default=16, help="refuse digraphs with more vertices")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("orient", help="minimum of a parameter over all orientations")
    o.add_argument("graph", help="edge-list file or family spec")
    o.add_argument("parameter", choices=PARAMETERS)
    o.add_argument("--no-dedup", action="store_true", help="do not skip automorphic orientations")
    o.add_argument("--sc-only", action="store_true", help="only strongly connected orientations")
    o.add_argument("--all-orientations", action="store_true", help="list every optimal orientation")
    o.add_argument("--workers", type=int, default=None, help="parallel workers (default: available cores)")
    o.add_argument("--cap", type=int, default=24, help="refuse graphs with more edges")
    o.set_defaults(func=cmd_orient)

    v = sub.add_parser("verify", help="check a strategy certificate")
    v.add_argument("certificate")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("necolor", help="build an NE coloring and certify its orientation")
    n.add_argument("family", choices=NE_FAMILIES)
    n.add_argument("params", nargs="*")
    n.add_argument("--emit-cert", metavar="PATH")
    n.set_defaults(func=cmd_necolor)

    r = sub.add_parser("reproduce", help="run the reproduction suite and write a CSV table")
    r.add_argument("suite", nargs="?", default="quick", choices=SUITES)
    r.add_argument("--out", default="results", help="output directory")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code in (0, None) else USAGE
    args.argv = argv
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except CertificateError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return FAILED
    except (EternalDominationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
