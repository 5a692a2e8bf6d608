"""Exact graph parameters by subset enumeration.

Every minimization walks subsets in increasing cardinality, so the first hit is
optimal. Enumerations refuse instances above ``cap`` vertices (default 16).
Functions that may have no feasible set return ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ._bits import bit, full, iter_bits, mask_of, members
from .errors import CapabilityError, StructureError
from .graphs import Digraph, SimpleGraph, as_digraph
from .structure import (
    distances_from,
    distances_to_set,
    is_acyclic,
    is_strongly_connected,
    is_two_edge_connected,
)

DEFAULT_CAP = 16


@dataclass(frozen=True)
class InvariantResult:
    value: int
    witness: int
    k: int | None = None
    cover: tuple[int, ...] = field(default=())

    @property
    def vertices(self) -> list[int]:
        return members(self.witness)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapabilityError(f"exhaustive search is capped at {cap} vertices, got {n}")


def _subsets(n: int, size: int):
    for c in combinations(range(n), size):
        yield mask_of(c)


# -- predicates --------------------------------------------------------------


def is_independent(g: SimpleGraph, s: int) -> bool:
    return all(not (g.adj[v] & s) for v in iter_bits(s))


def is_dominating(d: Digraph | SimpleGraph, s: int) -> bool:
    d = as_digraph(d)
    covered = s
    for v in iter_bits(s):
        covered |= d.out_mask[v]
    return covered == d.vertex_mask


def is_dominating_dominated(d: Digraph, s: int) -> bool:
    outside = d.vertex_mask & ~s
    return all(d.out_mask[v] & s and d.in_mask[v] & s for v in iter_bits(outside))


def is_clique(g: SimpleGraph, s: int) -> bool:
    return all((g.adj[v] | bit(v)) & s == s for v in iter_bits(s))


def is_two_dominating(g: SimpleGraph, s: int) -> bool:
    outside = full(g.n) & ~s
    return all((g.adj[v] & s).bit_count() >= 2 for v in iter_bits(outside))


def induces_two_edge_connected(g: SimpleGraph, s: int) -> bool:
    if s == 0:
        return False
    sub, _ = g.induced(members(s))
    return is_two_edge_connected(sub)


# -- independence and acyclicity ---------------------------------------------


def alpha_graph(g: SimpleGraph) -> InvariantResult:
    """Maximum independent set by degree branching."""

    def best(p: int) -> int:
        if not p:
            return 0
        pick, pick_deg = -1, -1
        for v in iter_bits(p):
            dv = (g.adj[v] & p).bit_count()
            if dv <= 1:
                return bit(v) | best(p & ~(g.adj[v] | bit(v)))
            if dv > pick_deg:
                pick, pick_deg = v, dv
        without = best(p & ~bit(pick))
        with_ = bit(pick) | best(p & ~(g.adj[pick] | bit(pick)))
        return with_ if with_.bit_count() >= without.bit_count() else without

    s = best(full(g.n))
    return InvariantResult(s.bit_count(), s)


def alpha_digraph(d: Digraph, cap: int = DEFAULT_CAP) -> InvariantResult:
    """Largest induced acyclic subgraph, scanning sizes downward from ``n``."""
    _check_cap(d.n, cap)
    for size in range(d.n, -1, -1):
        for s in _subsets(d.n, size):
            if is_acyclic(d, s):
                return InvariantResult(size, s)
    raise AssertionError("the empty set is acyclic")


def has_acyclic_subset(d: Digraph, size: int) -> bool:
    return any(is_acyclic(d, s) for s in _subsets(d.n, size))


# -- domination ---------------------------------------------------------------


def domination_number(d: Digraph | SimpleGraph, cap: int = DEFAULT_CAP) -> InvariantResult:
    """Minimum out-dominating set; undirected input is read as its symmetric digraph."""
    d = as_digraph(d)
    _check_cap(d.n, cap)
    for size in range(d.n + 1):
        for s in _subsets(d.n, size):
            if is_dominating(d, s):
                return InvariantResult(size, s)
    raise AssertionError("V dominates itself")


def gamma_dd(d: Digraph, cap: int = DEFAULT_CAP) -> InvariantResult | None:
    """Smallest strongly connected dominating-dominated set, or None if there is none."""
    _check_cap(d.n, cap)
    for size in range(1, d.n + 1):
        for s in _subsets(d.n, size):
            if is_dominating_dominated(d, s) and is_strongly_connected(d, s):
                return InvariantResult(size, s)
    return None


def _require_strong(d: Digraph) -> None:
    if not is_strongly_connected(d):
        raise StructureError("digraph must be strongly connected")


def scdd_prime(d: Digraph, cap: int = DEFAULT_CAP) -> InvariantResult:
    """Minimum of ``k + |S| - 1`` over strongly connected ``k``-dominating-dominated sets ``S``.

    Outside vertices must have an in-arc from ``S`` and directed distance at
    most ``k`` to ``S``. With ``S = V`` no vertex is outside and ``k = 0``.
    """
    _check_cap(d.n, cap)
    _require_strong(d)
    best: InvariantResult | None = None
    for size in range(1, d.n + 1):
        if best is not None and size - 1 >= best.value:
            break
        for s in _subsets(d.n, size):
            outside = d.vertex_mask & ~s
            if any(not d.in_mask[v] & s for v in iter_bits(outside)):
                continue
            if not is_strongly_connected(d, s):
                continue
            dist = distances_to_set(d, s)
            k = max((dist[v] for v in iter_bits(outside)), default=0)
            value = k + size - 1
            if best is None or value < best.value:
                best = InvariantResult(value, s, k=k)
    assert best is not None
    return best


def gamma_c_digraph(d: Digraph, cap: int = DEFAULT_CAP) -> InvariantResult:
    """Smallest dominating set inducing a strongly connected subdigraph."""
    _check_cap(d.n, cap)
    _require_strong(d)
    for size in range(1, d.n + 1):
        for s in _subsets(d.n, size):
            if is_dominating(d, s) and is_strongly_connected(d, s):
                return InvariantResult(size, s)
    raise AssertionError("V is a connected dominating set")


def diameter(d: Digraph) -> int:
    _require_strong(d)
    return max((max(distances_from(d, v)) for v in range(d.n)), default=0)


# -- undirected covers --------------------------------------------------------


def _maximal_cliques_with(g: SimpleGraph, v: int, within: int):
    """Bron-Kerbosch over ``within``; yields maximal cliques of g[within] containing v."""

    def expand(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: (g.adj[u] & p).bit_count())
        for u in iter_bits(p & ~g.adj[pivot]):
            yield from expand(r | bit(u), p & g.adj[u], x & g.adj[u])
            p &= ~bit(u)
            x |= bit(u)

    yield from expand(bit(v), g.adj[v] & within, 0)


def clique_cover_number(g: SimpleGraph, cap: int = DEFAULT_CAP) -> InvariantResult:
    """Fewest cliques covering V, by iterative deepening over maximal cliques."""
    _check_cap(g.n, cap)
    if g.n == 0:
        return InvariantResult(0, 0)

    def cover(p: int, budget: int) -> list[int] | None:
        if not p:
            return []
        if budget == 0:
            return None
        v = (p & -p).bit_length() - 1
        for c in _maximal_cliques_with(g, v, p):
            rest = cover(p & ~c, budget - 1)
            if rest is not None:
                return [c] + rest
        return None

    for budget in range(1, g.n + 1):
        found = cover(full(g.n), budget)
        if found is not None:
            return InvariantResult(budget, full(g.n), cover=tuple(found))
    raise AssertionError("singletons always cover")


def gamma_22(g: SimpleGraph, cap: int = DEFAULT_CAP) -> InvariantResult | None:
    """Smallest 2-dominating set inducing a 2-edge-connected subgraph, or None."""
    _check_cap(g.n, cap)
    for size in range(1, g.n + 1):
        for s in _subsets(g.n, size):
            if is_two_dominating(g, s) and induces_two_edge_connected(g, s):
                return InvariantResult(size, s)
    return None


# -- the inequality chain -----------------------------------------------------


@dataclass
class ChainReport:
    values: dict[str, int | None]
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, holds in self.checks.items() if not holds]


def check_inequality_chain(d: Digraph, gamma_inf: int, gamma_inf_m: int) -> ChainReport:
    """Check the domination chain (and the strongly connected refinements) against solved game values."""
    g = domination_number(d).value
    a = alpha_digraph(d).value
    dd = gamma_dd(d)
    values: dict[str, int | None] = {
        "gamma": g,
        "gamma_inf_m": gamma_inf_m,
        "alpha": a,
        "gamma_inf": gamma_inf,
        "gamma_dd": dd.value if dd else None,
    }
    checks = {
        "gamma <= gamma_inf_m": g <= gamma_inf_m,
        "gamma_inf_m <= alpha": gamma_inf_m <= a,
        "alpha <= gamma_inf": a <= gamma_inf,
        "gamma_inf <= C(alpha+1, 2)": gamma_inf <= comb(a + 1, 2),
    }
    if dd is not None:
        checks["gamma_inf_m <= gamma_dd + 1"] = gamma_inf_m <= dd.value + 1
    if d.n >= 2 and is_strongly_connected(d):
        sp = scdd_prime(d).value
        gc = gamma_c_digraph(d).value
        diam = diameter(d)
        values.update(scdd_prime=sp, gamma_c=gc, diameter=diam)
        checks["gamma_inf_m <= scdd' + 1"] = gamma_inf_m <= sp + 1
        checks["scdd' + 1 <= gamma_c + diam"] = sp + 1 <= gc + diam
        checks["gamma_c + diam <= (gamma + 1) * diam"] = gc + diam <= (g + 1) * diam
    return ChainReport(values, checks)
