"""Generators for the graph families used throughout the package.

Numbering conventions: grids map ``(i, j)`` to ``i * m + j`` (row major) and
products map ``(a, b)`` to ``a * |V2| + b``. ``K_{a,b}`` puts the first part on
``0..a-1``.
"""

from __future__ import annotations

from functools import reduce
from typing import Sequence

from .errors import ParameterError
from .graphs import SimpleGraph, product


def path(n: int) -> SimpleGraph:
    if n < 1:
        raise ParameterError("a path needs at least one vertex")
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise ParameterError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> SimpleGraph:
    if n < 1:
        raise ParameterError("a complete graph needs at least one vertex")
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    if a < 1 or b < 1:
        raise ParameterError("both parts of K_{a,b} must be non-empty")
    return SimpleGraph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def empty(n: int) -> SimpleGraph:
    return SimpleGraph(n, [])


def star(leaves: int) -> SimpleGraph:
    return complete_bipartite(1, leaves)


def grid(n: int, m: int) -> SimpleGraph:
    """``P_n x P_m`` with ``n`` rows and ``m`` columns."""
    return product(path(n), path(m))


def toroidal_grid(n: int, m: int) -> SimpleGraph:
    return product(cycle(n), cycle(m))


def king_toroidal(n: int, m: int) -> SimpleGraph:
    return product(cycle(n), cycle(m), "strong")


def rook(n: int, m: int | None = None) -> SimpleGraph:
    return product(complete(n), complete(n if m is None else m))


def hypergrid(dims: Sequence[int]) -> SimpleGraph:
    """Cartesian product of cycles, mixed-radix numbering with the last axis fastest."""
    if len(dims) < 1:
        raise ParameterError("a hypergrid needs at least one dimension")
    return reduce(product, [cycle(d) for d in dims])


def figure2_counterexample() -> SimpleGraph:
    """Two 5-cycles 0-1-2-3-4 and 5-6-7-8-9 joined by the edges 4-5 and 3-7.

    2-vertex-connected, 10 vertices, 12 edges. Reading the drawing with
    v1..v10 as 0..9, the cross edges are v5-v6 and v4-v8.
    """
    ring1 = [(i, (i + 1) % 5) for i in range(5)]
    ring2 = [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    return SimpleGraph(10, ring1 + ring2 + [(4, 5), (3, 7)])


def house() -> SimpleGraph:
    """C4 0-1-3-2 with roof vertex 4 on top of edge 2-3."""
    return SimpleGraph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "empty": 1,
    "star": 1,
    "complete_bipartite": 2,
    "grid": 2,
    "toroidal_grid": 2,
    "king_toroidal": 2,
    "figure2_counterexample": 0,
    "house": 0,
}

_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "grid": grid,
    "toroidal_grid": toroidal_grid,
    "king_toroidal": king_toroidal,
    "figure2_counterexample": figure2_counterexample,
    "house": house,
}

FAMILIES = tuple(sorted(list(_BUILDERS) + ["rook", "hypergrid"]))


def generate_family(family: str, params: Sequence[int] = ()) -> SimpleGraph:
    """Build a named family member, e.g. ``generate_family("grid", [3, 3])``."""
    params = [int(p) for p in params]
    if family == "rook":
        if len(params) not in (1, 2):
            raise ParameterError("rook takes one or two sizes")
        return rook(*params)
    if family == "hypergrid":
        return hypergrid(params)
    if family not in _BUILDERS:
        raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if len(params) != _ARITY[family]:
        raise ParameterError(f"{family} takes {_ARITY[family]} parameter(s), got {len(params)}")
    return _BUILDERS[family](*params)
