"""Known exact values and bounds for oriented eternal domination, queryable per graph family.

Each ``Prediction`` carries a short source tag naming the result it comes
from, so reproduction tables can trace a computed value back to its claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb, floor, log2

from .errors import ParameterError, StructureError
from .graphs import SimpleGraph
from .structure import biconnected_components, is_connected

PARAMETERS = ("oedn", "oednm", "oalpha", "gamma_inf", "gamma_inf_m")


@dataclass(frozen=True)
class Prediction:
    parameter: str
    lower: int
    upper: int
    exact: bool
    source: str

    def __post_init__(self):
        if self.lower > self.upper:
            raise ParameterError(f"empty prediction interval [{self.lower}, {self.upper}]")
        if self.exact != (self.lower == self.upper):
            raise ParameterError("exact must hold exactly when lower == upper")

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def describe(self) -> str:
        return str(self.lower) if self.exact else f"[{self.lower},{self.upper}]"

    def admits(self, value: int) -> bool:
        return self.lower <= value <= self.upper


def _exact(parameter: str, value: int, source: str) -> Prediction:
    return Prediction(parameter, value, value, True, source)


def _range(parameter: str, lo: int, hi: int, source: str) -> Prediction:
    return Prediction(parameter, lo, hi, lo == hi, source)


# -- grids -----------------------------------------------------------------------------


def _split(t: int) -> tuple[int, int]:
    """Write ``t = 3p + 2x`` with ``x`` in {0, 1, 2}."""
    if t < 2:
        raise ParameterError(f"grid side must be at least 2, got {t}")
    x = {0: 0, 1: 2, 2: 1}[t % 3]
    return (t - 2 * x) // 3, x


def grid_up(n: int, m: int) -> int:
    """Tiling bound: 3x3 blocks of 7, 2-wide strips at 3 per 2x2, corner 2x2 blocks of 3."""
    q, y = _split(n)
    p, x = _split(m)
    return 7 * p * q + ceil(9 * p / 2) * y + ceil(9 * q / 2) * x + 3 * x * y


def _rows_bound(lines: int, length: int) -> int:
    # every odd line, plus a third of each even line
    return ceil(lines / 2) * length + (lines // 2) * ceil(length / 3)


def grid_low(n: int, m: int) -> int:
    """Acyclic-set bound on any orientation of P_n x P_m, best of both line directions."""
    if n < 1 or m < 1:
        raise ParameterError("grid sides must be positive")
    return max(_rows_bound(n, m), _rows_bound(m, n))


# -- class predicates ----------------------------------------------------------------


def oednm2_characterization(g: SimpleGraph) -> bool:
    """Whether the complement of ``g`` is a small enough matching for two guards to suffice."""
    n = g.n
    if n < 3:
        raise ParameterError(f"the characterization needs n >= 3, got {n}")
    comp = g.complement()
    if any(comp.degree(v) > 1 for v in range(n)):
        return False
    allowed = n // 2 if n % 2 == 0 else n // 2 - 1
    return comp.m <= allowed


def _universal_in(g: SimpleGraph, part: int) -> int | None:
    for v in range(g.n):
        if part >> v & 1 and (g.adj[v] | (1 << v)) & part == part:
            return v
    return None


def _parts(g: SimpleGraph, mask: int) -> list[int]:
    parts, seen = [], 0
    for v in range(g.n):
        if not mask >> v & 1 or seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            u = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = g.adj[u] & mask & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        parts.append(comp)
    return parts


def trivially_perfect_recognize(g: SimpleGraph) -> bool:
    """Peel a universal vertex off every connected part until nothing is left."""
    stack = _parts(g, (1 << g.n) - 1)
    while stack:
        part = stack.pop()
        u = _universal_in(g, part)
        if u is None:
            return False
        stack.extend(_parts(g, part & ~(1 << u)))
    return True


@dataclass(frozen=True)
class TPStructure:
    universal: int
    blocks: tuple[tuple[int, ...], ...]
    case: str
    value: int


def trivially_perfect_structure(g: SimpleGraph) -> TPStructure:
    if g.n < 2 or not is_connected(g):
        raise StructureError("need a connected graph with at least 2 vertices")
    if not trivially_perfect_recognize(g):
        raise StructureError("graph is not trivially perfect")
    x = _universal_in(g, (1 << g.n) - 1)
    blocks = tuple(tuple(b) for b in biconnected_components(g))
    l = len(blocks)
    big = [b for b in blocks if len(b) >= 3]
    if len(big) == 1:
        sub, _ = g.induced(big[0])
        inner = 2 if oednm2_characterization(sub) else 3
        return TPStructure(x, blocks, "single-large-block", inner + l - 1)
    if all(len(b) <= 3 for b in blocks):
        return TPStructure(x, blocks, "small-blocks", l + 1)
    return TPStructure(x, blocks, "two-large-blocks", l + 2)


def trivially_perfect_oednm(g: SimpleGraph) -> int:
    return trivially_perfect_structure(g).value


# -- per-family predictions --------------------------------------------------------------


def _log2floor(n: int) -> int:
    return floor(log2(n))


def predict(family: str, params, parameter: str) -> Prediction:
    """The known value or bounds of ``parameter`` on a named family instance."""
    if parameter not in PARAMETERS:
        raise ParameterError(f"unknown parameter {parameter!r}")
    params = [int(p) for p in params]
    key = (family, parameter)

    def need(count: int) -> None:
        if len(params) != count:
            raise ParameterError(f"{family} takes {count} parameter(s), got {len(params)}")

    if family == "cycle":
        need(1)
        (n,) = params
        if n < 3:
            raise ParameterError("cycle needs n >= 3")
        if parameter == "oedn":
            return _exact(parameter, n - 1, "cycles")
        if parameter == "oednm":
            return _exact(parameter, ceil(n / 2), "cycles")
    if family in ("path", "tree", "forest"):
        need(1)
        (n,) = params
        if parameter in ("oedn", "oednm", "oalpha"):
            return _exact(parameter, n, "forests")
    if family == "complete":
        need(1)
        (n,) = params
        if n < 1:
            raise ParameterError("complete graph needs n >= 1")
        lg = _log2floor(n)
        if parameter == "oalpha":
            return _range(parameter, lg + 1, 2 * lg + 1, "tournament acyclic subsets")
        if parameter == "oedn":
            return _range(parameter, lg + 1, comb(2 * lg + 2, 2), "clique bounds")
        if parameter == "oednm":
            return _exact(parameter, min(n, 2), "two-guard characterization")
    if family == "complete_bipartite":
        need(2)
        a, b = sorted(params)
        if a < 1:
            raise ParameterError("both parts must be nonempty")
        if parameter == "oedn":
            return _exact(parameter, b + 1, "complete bipartite")
        if parameter == "oednm":
            if a == 1:
                return _exact(parameter, b + 1, "forests")
            if (a, b) == (2, 2):
                return _exact(parameter, 2, "two-guard characterization")
            if (a, b) in ((2, 3), (3, 3)):
                return _exact(parameter, 3, "complete bipartite")
            return _exact(parameter, 4, "complete bipartite")
    if family == "grid":
        need(2)
        n, m = params
        if min(n, m) < 2:
            raise ParameterError("grid sides must be at least 2")
        if parameter == "oedn":
            return _range(parameter, grid_low(n, m), grid_up(n, m), "grid bounds")
        if parameter == "oednm":
            up = ceil(n * m / 2)
            if max(n, m) <= 5:
                return _exact(parameter, up, "grid computer check")
            return _range(parameter, ceil(n * m / 4), up, "grid hamiltonian bound")
    if family == "toroidal_grid":
        need(2)
        n, m = params
        if min(n, m) < 3:
            raise ParameterError("toroidal grid sides must be at least 3")
        if parameter == "oednm":
            lower = ceil(n * m / 5)  # each vertex dominates at most five
            if n % 3 == 0 and m % 3 == 0:
                return _range(parameter, lower, n * m // 3, "NE coloring torus")
            a, b = n // 3, m // 3
            return _range(parameter, lower, n * m - 6 * a * b, "padded torus")
    if family == "king_toroidal":
        need(2)
        n, m = params
        if parameter == "oednm" and n % 5 == 0 and m % 5 == 0:
            return _range(parameter, ceil(n * m / 9), n * m // 5, "NE coloring king")
    if family == "rook":
        need(1)
        (n,) = params
        if parameter == "oednm":
            return _exact(parameter, n, "NE coloring rook")
    if family == "hypergrid":
        if not params:
            raise ParameterError("hypergrid needs at least one dimension")
        k = len(params)
        total = 1
        for d in params:
            total *= d
        if parameter == "oednm" and all(d % (k + 1) == 0 for d in params):
            return _range(parameter, ceil(total / (2 * k + 1)), total // (k + 1), "NE coloring hypergrid")
    raise ParameterError(f"no known statement for {key}")


# -- reconciliation ---------------------------------------------------------------------


@dataclass(frozen=True)
class ReconcileRow:
    instance: str
    parameter: str
    expected: str
    computed: int | None
    status: str
    source: str


def reconcile(instance: str, prediction: Prediction, solved: int | None) -> ReconcileRow:
    """PASS when the solved value lies in the predicted interval (equal to it when exact)."""
    ok = solved is not None and prediction.admits(solved)
    return ReconcileRow(instance, prediction.parameter, prediction.describe(), solved,
                        "PASS" if ok else "FAIL", prediction.source)
