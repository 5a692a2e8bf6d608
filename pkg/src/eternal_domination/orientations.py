"""Exhaustive search for the best orientation of an undirected graph.

An orientation is a mask over the canonical edge order (bit ``i`` set means
edge ``i`` points from its larger endpoint to its smaller one). Masks are
visited as a little-endian counter. With ``dedup`` only the representative of
each automorphism orbit is visited, namely the orientation whose bit sequence
``b0 b1 ...`` is lexicographically least.

Orientation parameters add up over 2-edge-connected components: every
directed cycle avoids bridges, so strongly connected components never cross
one. Inside a component with at least two vertices the eternal parameters are
searched over strongly connected orientations only, since guards never leave
their strongly connected component.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Iterator

import numpy as np

from .errors import CapabilityError, ParameterError
from .graphs import Orientation, SimpleGraph, symmetric
from .invariants import alpha_graph, domination_number, gamma_dd, has_acyclic_subset
from .solver import MULTI, SINGLE, solve
from .structure import automorphisms, is_strongly_connected, two_edge_connected_components

EDGE_CAP = 24
PARAMETERS = ("oedn", "oednm", "oalpha", "oscdd")
_CHUNK = 1 << 14


@dataclass(frozen=True)
class OrientedResult:
    parameter: str
    value: int | None
    best_orientation: Orientation | None
    examined: int
    pruned: int
    optimal_masks: tuple[int, ...] = field(default=(), compare=False)

    def record(self, graph: str = "", wall_time: float | None = None) -> dict:
        bits = self.best_orientation.bitstring() if self.best_orientation is not None else None
        return {
            "graph": graph,
            "parameter": self.parameter,
            "value": self.value,
            "orientation_bits": bits,
            "examined": self.examined,
            "pruned": self.pruned,
            "wall_time": wall_time,
        }

    def to_json(self, graph: str = "", wall_time: float | None = None) -> str:
        return json.dumps(self.record(graph, wall_time))


# -- enumeration ------------------------------------------------------------------


def _edge_actions(g: SimpleGraph, perms) -> tuple[np.ndarray, np.ndarray]:
    """Per automorphism: where each edge goes and whether its direction flips."""
    index = g.edge_index()
    dest = np.empty((len(perms), g.m), dtype=np.int64)
    flip = np.empty((len(perms), g.m), dtype=np.int64)
    for a, p in enumerate(perms):
        for e, (u, v) in enumerate(g.edges):
            pu, pv = p[u], p[v]
            dest[a, e] = index[(min(pu, pv), max(pu, pv))]
            flip[a, e] = pu > pv
    return dest, flip


class _OrbitFilter:
    """Vectorized test for orbit representatives.

    The key of a mask reads its bits most-significant-first from edge 0, so a
    smaller key is a lexicographically smaller bit sequence. Each automorphism
    acts affinely on bit vectors, hence every image key is one matrix product.
    """

    def __init__(self, g: SimpleGraph, perms):
        m = g.m
        dest, flip = _edge_actions(g, perms)
        weight = np.int64(1) << (m - 1 - dest)          # weight of each source bit after mapping
        self.coef = (weight * (1 - 2 * flip)).T          # (m, |Aut|)
        self.offset = (weight * flip).sum(axis=1)        # (|Aut|,)
        self.shifts = np.arange(m, dtype=np.int64)

    def representatives(self, lo: int, hi: int) -> np.ndarray:
        masks = np.arange(lo, hi, dtype=np.int64)
        bits = (masks[:, None] >> self.shifts) & 1
        keys = bits @ self.coef + self.offset
        own = keys[:, 0]  # identity comes first
        return masks[own == keys.min(axis=1)]


def _automorphisms_or_none(g: SimpleGraph):
    try:
        return automorphisms(g)
    except CapabilityError:
        return None


def _check_edges(g: SimpleGraph, cap: int) -> None:
    if g.m > cap:
        raise CapabilityError(
            f"orientation search is capped at {cap} edges, got {g.m}; "
            "use a certificate for an upper bound instead")


def _candidate_masks(g: SimpleGraph, dedup: bool, sc_only: bool, lo: int, hi: int,
                     orbit: _OrbitFilter | None) -> Iterator[int]:
    for start in range(lo, hi, _CHUNK):
        stop = min(hi, start + _CHUNK)
        if dedup and orbit is not None:
            chunk = orbit.representatives(start, stop).tolist()
        else:
            chunk = range(start, stop)
        for mask in chunk:
            if sc_only and not is_strongly_connected(Orientation.from_mask(g, mask).digraph()):
                continue
            yield mask


def enumerate_orientations(g: SimpleGraph, dedup: bool = False, strongly_connected_only: bool = False,
                           cap: int = EDGE_CAP) -> Iterator[Orientation]:
    """Every orientation of ``g``, optionally one per orbit and/or strongly connected only."""
    _check_edges(g, cap)
    orbit = None
    if dedup:
        perms = _automorphisms_or_none(g)
        orbit = _OrbitFilter(g, perms) if perms is not None and g.m else None
    for mask in _candidate_masks(g, dedup, strongly_connected_only, 0, 1 << g.m, orbit):
        yield Orientation.from_mask(g, mask)


# -- evaluating one orientation ----------------------------------------------------


def _evaluate(g: SimpleGraph, mask: int, parameter: str, limit: int | None) -> int | None:
    """Value of ``parameter`` on one orientation if it is below ``limit``, else None."""
    d = Orientation.from_mask(g, mask).digraph()
    if parameter in ("oedn", "oalpha"):
        if limit is not None and has_acyclic_subset(d, limit):
            return None
        top = d.n if limit is None else limit - 1
        alpha = next(s for s in range(top, -1, -1) if has_acyclic_subset(d, s))
        if parameter == "oalpha":
            return alpha
        res = solve(d, SINGLE, start=alpha, below=limit)
        return None if res is None else res.value
    if parameter == "oednm":
        gamma = domination_number(d).value
        if limit is not None and gamma >= limit:
            return None
        res = solve(d, MULTI, start=gamma, below=limit)
        return None if res is None else res.value
    res = gamma_dd(d)
    if res is None or (limit is not None and res.value >= limit):
        return None
    return res.value


# -- range search (shared by the sequential and parallel paths) ------------------

_shared = None  # multiprocessing.Value holding the best value seen by any worker


def _init_worker(shared) -> None:
    global _shared
    _shared = shared


def _shared_best() -> int | None:
    if _shared is None:
        return None
    v = _shared.value
    return None if v < 0 else v


def _publish(value: int) -> None:
    if _shared is None:
        return
    with _shared.get_lock():
        if _shared.value < 0 or value < _shared.value:
            _shared.value = value


@dataclass
class _RangeOutcome:
    best: int | None = None
    best_mask: int | None = None
    examined: int = 0
    pruned: int = 0
    optimal: list[int] = field(default_factory=list)


def _search_range(g: SimpleGraph, parameter: str, dedup: bool, sc_only: bool, lo: int, hi: int,
                  collect: bool, floor: int) -> _RangeOutcome:
    perms = _automorphisms_or_none(g) if dedup else None
    orbit = _OrbitFilter(g, perms) if perms is not None and g.m else None
    out = _RangeOutcome()
    for mask in _candidate_masks(g, dedup, sc_only, lo, hi, orbit):
        out.examined += 1
        # prune on ties with the local best (strict excess when collecting) or on
        # strict excess over any worker's best; both keep the merge deterministic
        limit = None if out.best is None else out.best + collect
        shared = _shared_best()
        if shared is not None:
            limit = shared + 1 if limit is None else min(limit, shared + 1)
        value = _evaluate(g, mask, parameter, limit)
        if value is None:
            out.pruned += 1
            continue
        if out.best is None or value < out.best:
            out.best, out.best_mask = value, mask
            out.optimal = [mask]
            _publish(value)
        elif collect and value == out.best:
            out.optimal.append(mask)
        if not collect and out.best == floor:
            break
    return out


def _run_search(g: SimpleGraph, parameter: str, dedup: bool, sc_only: bool, collect: bool,
                floor: int, workers: int) -> _RangeOutcome:
    total = 1 << g.m
    if workers <= 1 or total < 2 * _CHUNK:
        return _search_range(g, parameter, dedup, sc_only, 0, total, collect, floor)
    shards = min(total // _CHUNK, 4 * workers)
    step = -(-total // shards)
    bounds = [(lo, min(total, lo + step)) for lo in range(0, total, step)]
    ctx = get_context("fork")
    shared = ctx.Value("i", -1)
    with ProcessPoolExecutor(max_workers=workers, mp_context=ctx, initializer=_init_worker,
                             initargs=(shared,)) as pool:
        futures = [pool.submit(_search_range, g, parameter, dedup, sc_only, lo, hi, collect, floor)
                   for lo, hi in bounds]
        parts = [f.result() for f in futures]
    merged = _RangeOutcome()
    for part in parts:  # shards are in mask order, so the first minimum wins ties
        merged.examined += part.examined
        merged.pruned += part.pruned
        if part.best is None:
            continue
        if merged.best is None or part.best < merged.best:
            merged.best, merged.best_mask = part.best, part.best_mask
            merged.optimal = list(part.optimal)
        elif part.best == merged.best:
            merged.optimal.extend(part.optimal)
    return merged


def _floor(g: SimpleGraph, parameter: str) -> int:
    """A value no orientation can beat; reaching it ends the search early."""
    if parameter in ("oedn", "oalpha"):
        return alpha_graph(g).value  # an independent set is acyclic in every orientation
    if parameter == "oednm":
        return domination_number(symmetric(g)).value
    return 1


# -- public searches -----------------------------------------------------------------


def _default_workers(workers: int | None) -> int:
    if workers is None:
        return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity")
                   else os.cpu_count() or 1)
    if workers < 1:
        raise ParameterError("workers must be at least 1")
    return workers


def search(g: SimpleGraph, parameter: str, dedup: bool = True, strongly_connected_only: bool | None = None,
           decompose: bool = True, cap: int = EDGE_CAP, workers: int | None = 1) -> OrientedResult:
    """Minimum of ``parameter`` over all orientations of ``g``.

    ``strongly_connected_only`` defaults to True for the eternal parameters on
    2-edge-connected pieces and False for oriented alpha. ``oscdd`` is None
    unless ``g`` is 2-edge-connected, since a dominating-dominated set pulls
    every outside vertex into its own strongly connected component.
    """
    if parameter not in PARAMETERS:
        raise ParameterError(f"unknown parameter {parameter!r}; choose from {PARAMETERS}")
    workers = _default_workers(workers)
    if parameter == "oscdd":
        comps = two_edge_connected_components(g)
        if g.n == 0 or len(comps) != 1 or g.n == 1:
            return OrientedResult(parameter, None, None, 0, 0)
        decompose = False
    if not decompose:
        _check_edges(g, cap)
        sc = strongly_connected_only
        if sc is None:
            sc = parameter in ("oednm", "oedn", "oscdd") and _bridgeless_connected(g)
        out = _run_search(g, parameter, dedup, sc, False, _floor(g, parameter), workers)
        best = Orientation.from_mask(g, out.best_mask) if out.best_mask is not None else None
        return OrientedResult(parameter, out.best, best, out.examined, out.pruned)
    parts = two_edge_connected_components(g)
    total, examined, pruned = 0, 0, 0
    bits = [False] * g.m
    index = g.edge_index()
    for comp in parts:
        if len(comp) == 1:
            total += 1
            continue
        sub, labels = g.induced(comp)
        res = search(sub, parameter, dedup, strongly_connected_only, decompose=False, cap=cap,
                     workers=workers)
        total += res.value
        examined += res.examined
        pruned += res.pruned
        for (u, v), b in zip(sub.edges, res.best_orientation.bits):
            bits[index[(labels[u], labels[v])]] = b
    return OrientedResult(parameter, total, Orientation(g, tuple(bits)), examined, pruned)


def _bridgeless_connected(g: SimpleGraph) -> bool:
    return g.n >= 2 and len(two_edge_connected_components(g)) == 1


def oedn(g: SimpleGraph, **kw) -> OrientedResult:
    return search(g, "oedn", **kw)


def oednm(g: SimpleGraph, **kw) -> OrientedResult:
    return search(g, "oednm", **kw)


def oalpha(g: SimpleGraph, **kw) -> OrientedResult:
    return search(g, "oalpha", **kw)


def oscdd(g: SimpleGraph, **kw) -> OrientedResult:
    return search(g, "oscdd", **kw)


def optimal_orientations(g: SimpleGraph, parameter: str, dedup: bool = True,
                         strongly_connected_only: bool = False, cap: int = EDGE_CAP,
                         workers: int | None = 1) -> OrientedResult:
    """All optimal orientations (one per orbit with ``dedup``) in ``optimal_masks``."""
    if parameter not in PARAMETERS:
        raise ParameterError(f"unknown parameter {parameter!r}; choose from {PARAMETERS}")
    _check_edges(g, cap)
    out = _run_search(g, parameter, dedup, strongly_connected_only, True, _floor(g, parameter),
                      _default_workers(workers))
    best = Orientation.from_mask(g, out.best_mask) if out.best_mask is not None else None
    return OrientedResult(parameter, out.best, best, out.examined, out.pruned,
                          tuple(sorted(out.optimal)))


def timed(fn, *args, **kw):
    t = time.perf_counter()
    res = fn(*args, **kw)
    return res, time.perf_counter() - t


# -- the edge-subdivision gadget ---------------------------------------------------


@dataclass
class GadgetReport:
    values: dict[str, int]
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def gadget_equalities(g: SimpleGraph, cap: int = EDGE_CAP) -> GadgetReport:
    """Compare the oriented parameters of C(g) with the game values of ``g`` plus ``m``.

    The m-eternal comparison is reported as a strict-inequality observation,
    not an identity: it may or may not be strict.
    """
    from .graphs import triangulation_gadget
    from .solver import gamma_inf, gamma_inf_m

    c = triangulation_gadget(g)
    _check_edges(c, cap)
    sym = symmetric(g)
    values = {
        "oedn(C)": oedn(c).value,
        "gamma_inf(G)+m": gamma_inf(sym).value + g.m,
        "oalpha(C)": oalpha(c).value,
        "alpha(G)+m": alpha_graph(g).value + g.m,
        "oednm(C)": oednm(c).value,
        "gamma_inf_m(G)+m": gamma_inf_m(sym).value + g.m,
    }
    checks = {
        "oedn(C) = gamma_inf(G)+m": values["oedn(C)"] == values["gamma_inf(G)+m"],
        "oalpha(C) = alpha(G)+m": values["oalpha(C)"] == values["alpha(G)+m"],
        "oednm(C) <= gamma_inf_m(G)+m": values["oednm(C)"] <= values["gamma_inf_m(G)+m"],
    }
    values["oednm strict"] = int(values["oednm(C)"] < values["gamma_inf_m(G)+m"])
    return GadgetReport(values, checks)
