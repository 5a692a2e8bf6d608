"""The reproduction suite: every exact value and bound at desk scale, as a traceable table.

Rows carry ``PASS``/``FAIL`` for claims, ``INFO`` for conjecture probes and
``SKIPPED`` for cells that are out of reach by exhaustive search. Random
instances come from seeds pinned in ``reproduce_manifest.json``.
"""

from __future__ import annotations

import csv
import json
import random
import time
from dataclasses import asdict, dataclass
from importlib import resources
from math import ceil
from pathlib import Path
from typing import Callable, Iterable

import networkx as nx

from ._bits import iter_bits, subsets_of_size
from .certificates import (
    build_cycle_cert,
    build_grid_tiling_cert,
    build_knm4_cert,
    build_knn_cert,
    build_trivially_perfect_cert,
    build_two_guard_cert,
)
from .closed_forms import (
    grid_low,
    grid_up,
    oednm2_characterization,
    predict,
    reconcile,
    trivially_perfect_oednm,
    trivially_perfect_recognize,
)
from .families import complete, complete_bipartite, cycle, figure2_counterexample, grid, path
from .graphs import Digraph, SimpleGraph, symmetric
from .invariants import check_inequality_chain, clique_cover_number, domination_number, is_dominating
from .necoloring import ne_build, orientation_from_ne, toroidal_padding_orientation
from .orientations import gadget_equalities, oalpha, oedn, oednm, optimal_orientations, search
from .solver import MULTI, SINGLE, closure_violation, defense, fixed_point, gamma_inf, gamma_inf_m
from .strategy import StrategyCertificate, verify_strategy
from .structure import bridges, is_connected, scc, two_edge_connected_components

COLUMNS = ("instance", "parameter", "paper_value_or_bounds", "computed", "status", "theorem_tag", "seconds")
SUITES = ("quick", "full")


@dataclass
class Row:
    instance: str
    parameter: str
    paper_value_or_bounds: str
    computed: str
    status: str
    theorem_tag: str
    seconds: float = 0.0


def load_manifest() -> dict:
    text = resources.files(__package__).joinpath("reproduce_manifest.json").read_text()
    return json.loads(text)


def _timed(fn: Callable[[], Row | list[Row]]) -> list[Row]:
    t = time.perf_counter()
    out = fn()
    dt = time.perf_counter() - t
    rows = out if isinstance(out, list) else [out]
    for r in rows:
        r.seconds = round(dt / len(rows), 3)
    return rows


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _predicted(instance: str, family: str, params, parameter: str, value: int | None) -> Row:
    pred = predict(family, params, parameter)
    rec = reconcile(instance, pred, value)
    return Row(instance, parameter, rec.expected, str(value), rec.status, rec.source)


# -- random instances --------------------------------------------------------------------


def random_digraph(rng: random.Random, n: int, p: float | None = None) -> Digraph:
    if p is None:
        p = rng.uniform(0.15, 0.7)
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def random_strong_digraph(rng: random.Random, n: int, offset: int = 0) -> list[tuple[int, int]]:
    """Arcs of a random strongly connected digraph on ``offset .. offset + n - 1``."""
    order = list(range(offset, offset + n))
    rng.shuffle(order)
    arcs = set()
    if n > 1:
        arcs.update(zip(order, order[1:] + order[:1]))
    for u in order:
        for v in order:
            if u != v and rng.random() < 0.3:
                arcs.add((u, v))
    return sorted(arcs)


def two_scc_digraph(rng: random.Random, n: int) -> tuple[Digraph, list[int], list[int]]:
    split = rng.randint(1, n - 1)
    a, b = list(range(split)), list(range(split, n))
    arcs = random_strong_digraph(rng, len(a)) + random_strong_digraph(rng, len(b), split)
    arcs += [(u, v) for u in a for v in b if rng.random() < 0.4]
    return Digraph(n, arcs), a, b


# -- property checks (shared with the test suite) ------------------------------------------


def random_bridged_graph(rng: random.Random, n_max: int = 8, max_edges: int = 12) -> SimpleGraph:
    """A random graph with at least one bridge and few enough edges for a whole-graph search."""
    while True:
        n = rng.randint(3, n_max)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45]
        if len(edges) > max_edges:
            continue
        g = SimpleGraph(n, edges)
        if bridges(g):
            return g


def bridged_additive(g: SimpleGraph) -> bool:
    """Whole-graph search agrees with the sum over 2-edge-connected components."""
    for parameter in ("oedn", "oednm"):
        whole = search(g, parameter, decompose=False).value
        parts = 0
        for comp in two_edge_connected_components(g):
            parts += 1 if len(comp) == 1 else search(g.induced(comp)[0], parameter, decompose=False).value
        if whole != parts:
            return False
    return True


def chain_ok(d: Digraph) -> bool:
    return check_inequality_chain(d, gamma_inf(d).value, gamma_inf_m(d).value).ok


def scc_additive(d: Digraph) -> bool:
    comps = scc(d)
    for fn in (gamma_inf, gamma_inf_m):
        total = sum(fn(d.induced(c)[0]).value for c in comps)
        if total != fn(d).value:
            return False
    return True


def audit_fixed_point(d: Digraph, k: int, mode: str) -> bool:
    """Survivors are closed; every dominating non-survivor loses to some attack."""
    fam = fixed_point(d, k, mode)
    if closure_violation(d, fam, mode) is not None:
        return False
    members_ = fam.members
    for s in subsets_of_size(d.n, k):
        if s in members_ or not is_dominating(d, s):
            continue
        if all(defense(d, s, r, members_, mode) is not None for r in iter_bits(d.vertex_mask & ~s)):
            return False
    return True


def certificate_agrees(cert: StrategyCertificate) -> bool:
    """An accepted certificate upper-bounds the exact value and its configs are all winning."""
    k = verify_strategy(cert)
    d = cert.digraph
    mode = cert.mode
    exact = (gamma_inf if mode == SINGLE else gamma_inf_m)(d).value
    fam = fixed_point(d, k, mode)
    return exact <= k and all(c in fam for c in cert.configs)


def atlas(n_min: int, n_max: int) -> Iterable[SimpleGraph]:
    """Every graph on ``n_min..n_max`` vertices up to isomorphism."""
    for h in nx.graph_atlas_g():
        if n_min <= h.number_of_nodes() <= n_max:
            yield SimpleGraph(h.number_of_nodes(), h.edges())


# -- experiments ------------------------------------------------------------------------------


def exp_cycles() -> list[Row]:
    rows = []
    for n in range(3, 8):
        g = cycle(n)
        rows += _timed(lambda: _predicted(f"C{n}", "cycle", [n], "oedn", oedn(g).value))
        rows += _timed(lambda: _predicted(f"C{n}", "cycle", [n], "oednm", oednm(g).value))
    return rows


def exp_grid33() -> list[Row]:
    g = grid(3, 3)
    rows = _timed(lambda: _predicted("P3xP3", "grid", [3, 3], "oedn", oedn(g).value))

    def orbits() -> Row:
        res = optimal_orientations(g, "oedn")
        count = len(res.optimal_masks)
        return Row("P3xP3", "optimal oedn orbits", "1", str(count), _status(count == 1 and res.value == 7),
                   "unique optimal 3x3 orientation")
    return rows + _timed(orbits)


def exp_grid_2n() -> list[Row]:
    rows = []
    for n in range(2, 6):
        g = grid(2, n)
        rows += _timed(lambda: Row(f"P2xP{n}", "oedn", str(ceil(3 * n / 2)), str(oedn(g).value), "", "grid 2xn"))
    for r in rows:
        r.status = _status(r.computed == r.paper_value_or_bounds)
    return rows


def exp_bipartite(full: bool) -> list[Row]:
    rows = []
    sizes = [(a, b) for a in range(1, 4) for b in range(a, 4)]
    for a, b in sizes:
        g = complete_bipartite(a, b)
        rows += _timed(lambda: _predicted(f"K{a},{b}", "complete_bipartite", [a, b], "oedn", oedn(g).value))
    table = [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4)]
    if full:
        table += [(1, 3), (1, 4), (4, 4)]
        rows += _timed(lambda: _predicted("K4,4", "complete_bipartite", [4, 4], "oedn",
                                          oedn(complete_bipartite(4, 4)).value))
    for a, b in table:
        g = complete_bipartite(a, b)
        rows += _timed(lambda: _predicted(f"K{a},{b}", "complete_bipartite", [a, b], "oednm", oednm(g).value))
    return rows


def exp_two_guards(n_max: int = 5) -> list[Row]:
    rows = []
    for n in range(3, n_max + 1):
        def run() -> Row:
            total = agree = 0
            for g in atlas(n, n):
                total += 1
                value = oednm(g).value
                agree += (value == 2) == oednm2_characterization(g)
            return Row(f"all graphs n={n}", "oednm == 2 iff characterization", f"{total}/{total}",
                       f"{agree}/{total}", _status(agree == total), "two-guard characterization")
        rows += _timed(run)
    return rows


def exp_figure2() -> list[Row]:
    g = figure2_counterexample()

    def run() -> Row:
        v = oednm(g).value
        return Row("figure2 (n=10)", "oednm", "6 (> ceil(n/2) = 5)", str(v), _status(v == 6 and v > 5),
                   "2-connected counterexample")
    return _timed(run)


def exp_gadget() -> list[Row]:
    def run() -> list[Row]:
        rep = gadget_equalities(path(3))
        v = rep.values
        return [
            Row("C(P3)", "oedn", f"gamma_inf(P3)+2 = {v['gamma_inf(G)+m']}", str(v["oedn(C)"]),
                _status(rep.checks["oedn(C) = gamma_inf(G)+m"]), "edge gadget"),
            Row("C(P3)", "oalpha", f"alpha(P3)+2 = {v['alpha(G)+m']}", str(v["oalpha(C)"]),
                _status(rep.checks["oalpha(C) = alpha(G)+m"]), "edge gadget"),
            Row("C(P3)", "oednm", "3 < gamma_inf_m(P3)+2 = 4", str(v["oednm(C)"]),
                _status(v["oednm(C)"] == 3 and v["gamma_inf_m(G)+m"] == 4), "edge gadget strictness"),
        ]
    return _timed(run)


def exp_ne_certificates() -> list[Row]:
    rows = []

    def rook() -> Row:
        c = ne_build("rook", 3)
        _, cert = orientation_from_ne(c)
        k = verify_strategy(cert)
        gamma = domination_number(symmetric(c.graph)).value
        return Row("K3xK3 (= C3xC3)", "oednm", "3 (exact)", f"certified <= {k}, gamma = {gamma}",
                   _status(k == 3 and gamma == 3), "NE coloring rook")
    rows += _timed(rook)
    for inst, args, bound, tag in [("C6xC6", ("torus", 6, 6), 12, "NE coloring torus"),
                                   ("C5(x)C5 king", ("king", 5, 5), 5, "NE coloring king"),
                                   ("C4xC4xC4", ("hypergrid", 4, 4, 4), 16, "NE coloring hypergrid")]:
        def run() -> Row:
            _, cert = orientation_from_ne(ne_build(*args))
            k = verify_strategy(cert)
            return Row(inst, "oednm", f"<= {bound}", f"certified <= {k}", _status(k <= bound), tag)
        rows += _timed(run)
    for n, m in [(8, 7), (4, 4), (5, 5)]:
        def padded() -> Row:
            p = toroidal_padding_orientation(n, m)
            k = verify_strategy(p.certificate)
            expected = n * m - 6 * (n // 3) * (m // 3)
            return Row(f"C{n}xC{m}", "oednm", f"<= {expected} (padded core)", f"certified <= {k}",
                       _status(k == expected), "padded torus")
        rows += _timed(padded)
    return rows


def exp_grid_oednm(manifest: dict, full: bool) -> list[Row]:
    rows = []
    cells = manifest["grid_oednm_exact"] + (manifest["grid_oednm_exact_full"] if full else [])
    for a, b in cells:
        g = grid(a, b)
        rows += _timed(lambda: _predicted(f"P{a}xP{b}", "grid", [a, b], "oednm", oednm(g).value))
    for a, b in manifest["grid_oednm_skipped"]:
        rows.append(Row(f"P{a}xP{b}", "oednm", str(ceil(a * b / 2)), "", "SKIPPED",
                        "grid computer check (beyond exhaustive reach)"))
    rows.append(Row("P5xP5", "oedn", f"[{grid_low(5, 5)},{grid_up(5, 5)}]", "", "INFO",
                    "grid bounds (open cell)"))
    return rows


def exp_grid_certificates() -> list[Row]:
    rows = []
    for n, m in [(2, 2), (3, 3), (3, 6), (5, 5)]:
        def run() -> Row:
            k = verify_strategy(build_grid_tiling_cert(n, m))
            return Row(f"P{n}xP{m}", "oedn", f"<= {grid_up(n, m)}", f"certified <= {k}",
                       _status(k == grid_up(n, m)), "grid tiling")
        rows += _timed(run)
    return rows


def exp_properties(manifest: dict, suite: str) -> list[Row]:
    seeds, counts = manifest["seeds"], manifest["counts"][suite]
    rows = []

    def chain() -> Row:
        rng = random.Random(seeds["chain"])
        n_ok = sum(chain_ok(random_digraph(rng, rng.randint(1, 6))) for _ in range(counts["chain"]))
        return Row(f"{counts['chain']} random digraphs n<=6", "inequality chain", "all hold",
                   f"{n_ok}/{counts['chain']}", _status(n_ok == counts["chain"]), "domination chain")

    def additivity() -> Row:
        rng = random.Random(seeds["scc_additivity"])
        n_ok = sum(scc_additive(two_scc_digraph(rng, rng.randint(2, 7))[0])
                   for _ in range(counts["scc_additivity"]))
        c = counts["scc_additivity"]
        return Row(f"{c} random 2-SCC digraphs n<=7", "SCC additivity", "all hold", f"{n_ok}/{c}",
                   _status(n_ok == c), "strongly connected components")

    def induced() -> Row:
        rng = random.Random(seeds["induced_monotonicity"])
        c = counts["induced_monotonicity"]
        n_ok = 0
        for _ in range(c):
            d = random_digraph(rng, rng.randint(1, 5))
            w = [v for v in range(d.n) if rng.random() < 0.6]
            n_ok += gamma_inf(d.induced(w)[0]).value <= gamma_inf(d).value
        return Row(f"{c} random induced subdigraphs n<=5", "induced monotonicity", "all hold",
                   f"{n_ok}/{c}", _status(n_ok == c), "induced subgraphs")

    def arcs() -> Row:
        rng = random.Random(seeds["arc_monotonicity"])
        c = counts["arc_monotonicity"]
        n_ok = 0
        for _ in range(c):
            d = random_digraph(rng, rng.randint(2, 5))
            if not d.arcs:
                n_ok += 1
                continue
            u, v = rng.choice(sorted(d.arcs))
            e = d.without_arc(u, v)
            n_ok += gamma_inf(e).value >= gamma_inf(d).value and gamma_inf_m(e).value >= gamma_inf_m(d).value
        return Row(f"{c} random arc deletions n<=5", "arc-deletion monotonicity", "all hold",
                   f"{n_ok}/{c}", _status(n_ok == c), "arc removal")

    def audits() -> Row:
        rng = random.Random(seeds["audit"])
        c = counts["audit"]
        n_ok = 0
        for _ in range(c):
            d = random_digraph(rng, rng.randint(1, 6))
            k = rng.randint(0, d.n)
            n_ok += audit_fixed_point(d, k, SINGLE) and audit_fixed_point(d, k, MULTI)
        return Row(f"{c} random fixed points n<=6", "soundness and maximality", "all hold",
                   f"{n_ok}/{c}", _status(n_ok == c), "greatest fixed point")

    def bridged() -> Row:
        rng = random.Random(seeds["bridged_additivity"])
        c = counts["bridged_additivity"]
        n_ok = sum(bridged_additive(random_bridged_graph(rng)) for _ in range(c))
        return Row(f"{c} random bridged graphs n<=8", "2-edge-connected additivity", "all hold",
                   f"{n_ok}/{c}", _status(n_ok == c), "2-edge-connected components")

    def certificates() -> Row:
        certs = [build_cycle_cert(n, mode) for n in range(3, 8) for mode in (SINGLE, MULTI)]
        certs += [build_knn_cert(n) for n in (1, 2, 3)]
        certs += [build_knm4_cert(2, 4), build_knm4_cert(3, 4)]
        certs += [build_grid_tiling_cert(2, 2), build_grid_tiling_cert(3, 3), build_grid_tiling_cert(2, 5)]
        certs += [build_two_guard_cert(complete(n)) for n in (3, 4, 5, 6)]
        certs += [orientation_from_ne(ne_build("rook", 3))[1]]
        tp = [g for g in atlas(2, 6) if is_connected(g) and trivially_perfect_recognize(g)]
        certs += [build_trivially_perfect_cert(g) for g in tp]
        n_ok = sum(certificate_agrees(c) for c in certs)
        return Row(f"{len(certs)} certificates", "certificate vs solver", "all agree",
                   f"{n_ok}/{len(certs)}", _status(n_ok == len(certs)), "certificate cross-check")

    for fn in (chain, additivity, induced, arcs, audits, bridged, certificates):
        rows += _timed(fn)
    return rows


def exp_full_extras(manifest: dict) -> list[Row]:
    rows = []
    for n in (3, 4, 5):
        g = complete(n)
        rows += _timed(lambda: _predicted(f"K{n}", "complete", [n], "oalpha", oalpha(g).value))
        rows += _timed(lambda: _predicted(f"K{n}", "complete", [n], "oedn", oedn(g).value))
        rows += _timed(lambda: _predicted(f"K{n}", "complete", [n], "oednm", oednm(g).value))

    def trivially_perfect() -> Row:
        graphs = [g for g in atlas(2, 7) if is_connected(g) and trivially_perfect_recognize(g)]
        n_ok = sum(trivially_perfect_oednm(g) == oednm(g).value for g in graphs)
        return Row(f"{len(graphs)} connected trivially perfect graphs n<=7", "oednm", "formula",
                   f"{n_ok}/{len(graphs)}", _status(n_ok == len(graphs)), "trivially perfect")
    rows += _timed(trivially_perfect)

    def forests() -> Row:
        rng = random.Random(manifest["seeds"]["forests"])
        c, n_ok = 30, 0
        for _ in range(c):
            n = rng.randint(1, 7)
            g = SimpleGraph(n, [(rng.randrange(v), v) for v in range(1, n)])
            n_ok += oedn(g).value == n and oednm(g).value == n
        return Row(f"{c} random trees n<=7", "oedn = oednm = n", "n", f"{n_ok}/{c}", _status(n_ok == c), "forests")
    rows += _timed(forests)

    for r, c in [(3, 5), (4, 4)]:
        g = grid(r, c)
        if g.m <= 24:
            rows.append(Row(f"P{r}xP{c}", "oedn", f"[{grid_low(r, c)},{grid_up(r, c)}]", "", "SKIPPED",
                            "grid bounds (2^%d orientations)" % g.m))

    def conjecture_theta() -> Row:
        graphs = [g for g in atlas(2, 6) if g.m >= 1]
        bad = [g for g in graphs if not clique_cover_number(g).value < oalpha(g).value]
        return Row(f"{len(graphs)} graphs n<=6 with an edge", "theta < oalpha", "conjecture",
                   f"{len(graphs) - len(bad)}/{len(graphs)} hold", "INFO", "clique cover conjecture")
    rows += _timed(conjecture_theta)

    def conjecture_ne() -> Row:
        c = ne_build("rook", 3)
        v = oednm(c.graph).value
        return Row("K3xK3 with (3,2) coloring", "oednm = n/k", "3", str(v), "INFO", "NE coloring conjecture")
    rows += _timed(conjecture_ne)
    return rows


def run_suite(suite: str = "quick", progress: Callable[[Row], None] | None = None) -> list[Row]:
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}")
    full = suite == "full"
    manifest = load_manifest()
    groups = [
        exp_cycles, exp_grid33, exp_grid_2n, lambda: exp_bipartite(full), exp_two_guards,
        exp_figure2, exp_gadget, exp_ne_certificates, lambda: exp_grid_oednm(manifest, full),
        exp_grid_certificates, lambda: exp_properties(manifest, suite),
    ]
    if full:
        groups.append(lambda: exp_full_extras(manifest))
    rows = []
    for group in groups:
        for row in group():
            rows.append(row)
            if progress:
                progress(row)
    return rows


def write_csv(rows: list[Row], path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=COLUMNS)
        w.writeheader()
        for r in rows:
            w.writerow(asdict(r))


def failed(rows: list[Row]) -> list[Row]:
    return [r for r in rows if r.status == "FAIL"]
