"""Neighborhood-equitable colorings and the orientations they induce.

A ``(k, l)``-NE coloring of a ``(k-1)l``-regular graph is a proper
``k``-coloring in which every vertex sees exactly ``l`` neighbors of each
other color. When ``l`` is even every two-color subgraph is Eulerian; orienting
each along Euler circuits gives every vertex ``l/2`` out-arcs into each other
class, and Hall's theorem then supplies a perfect multimove between any two
classes. So ``n/k`` guards sitting on one class defend forever.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce

import networkx as nx

from ._bits import bit, mask_of
from .errors import FormatError, IntegrityError, ParameterError
from .families import complete, cycle, king_toroidal, toroidal_grid
from .graphs import Digraph, SimpleGraph, product
from .matching import find_multimove
from .strategy import StrategyCertificate


@dataclass(frozen=True)
class NEColoring:
    graph: SimpleGraph
    k: int
    l: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.n:
            raise ParameterError("need exactly one color per vertex")
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    @property
    def classes(self) -> tuple[int, ...]:
        out = [0] * self.k
        for v, c in enumerate(self.colors):
            if 0 <= c < self.k:
                out[c] |= bit(v)
        return tuple(out)

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "classes": list(self.colors)}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, graph: SimpleGraph, data: dict) -> "NEColoring":
        try:
            return cls(graph, int(data["k"]), int(data["l"]), tuple(data["classes"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed coloring: {exc}") from exc


@dataclass(frozen=True)
class NEReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def ne_violations(c: NEColoring, limit: int = 20) -> list[str]:
    g, k, l = c.graph, c.k, c.l
    out: list[str] = []
    if k < 1 or l < 0:
        return [f"invalid parameters k={k}, l={l}"]
    bad = [v for v, col in enumerate(c.colors) if not 0 <= col < k]
    if bad:
        return [f"vertex {bad[0]} has color outside 0..{k - 1}"]
    if not g.is_regular((k - 1) * l):
        out.append(f"graph is not {(k - 1) * l}-regular")
    for u, v in g.edges:
        if c.colors[u] == c.colors[v]:
            out.append(f"edge ({u}, {v}) is monochromatic")
            if len(out) >= limit:
                return out
    classes = c.classes
    for v in range(g.n):
        for i in range(k):
            if i == c.colors[v]:
                continue
            seen = (g.adj[v] & classes[i]).bit_count()
            if seen != l:
                out.append(f"vertex {v} has {seen} neighbors of color {i}, expected {l}")
                if len(out) >= limit:
                    return out
    return out


def ne_verify(c: NEColoring) -> NEReport:
    return NEReport(tuple(ne_violations(c)))


# -- constructions -------------------------------------------------------------------


def _checked(c: NEColoring) -> NEColoring:
    report = ne_verify(c)
    if not report:
        raise IntegrityError(f"construction failed NE check: {report.violations[0]}")
    return c


def ne_product(c1: NEColoring, c2: NEColoring) -> NEColoring:
    """Color ``(a, b)`` of the cartesian product by ``color(a) + color(b) mod k``."""
    if c1.k != c2.k:
        raise ParameterError(f"color counts differ: {c1.k} vs {c2.k}")
    g = product(c1.graph, c2.graph, "cartesian")
    n2 = c2.graph.n
    colors = [(c1.colors[v // n2] + c2.colors[v % n2]) % c1.k for v in range(g.n)]
    return NEColoring(g, c1.k, c1.l + c2.l, tuple(colors))


def ne_build(family: str, *args) -> NEColoring:
    """Build a coloring: ``cycle3 n``, ``complete n``, ``product c1 c2``, ``king n m``,
    ``hypergrid d1 .. dk``; also ``torus n m`` and ``rook n`` as product shortcuts."""
    if family == "cycle3":
        (n,) = args
        if n < 3 or n % 3:
            raise ParameterError(f"cycle3 coloring needs 3 | n, got n={n}")
        return _checked(NEColoring(cycle(n), 3, 1, tuple(i % 3 for i in range(n))))
    if family == "complete":
        (n,) = args
        if n < 1:
            raise ParameterError("complete graph needs n >= 1")
        return _checked(NEColoring(complete(n), n, 1, tuple(range(n))))
    if family == "product":
        c1, c2 = args
        return _checked(ne_product(c1, c2))
    if family == "torus":
        n, m = args
        return _checked(ne_product(ne_build("cycle3", n), ne_build("cycle3", m)))
    if family == "rook":
        (n,) = args
        return _checked(ne_product(ne_build("complete", n), ne_build("complete", n)))
    if family == "king":
        n, m = args
        if n < 5 or m < 5 or n % 5 or m % 5:
            raise ParameterError(f"king coloring needs 5 | n and 5 | m, got {n}x{m}")
        g = king_toroidal(n, m)
        return _checked(NEColoring(g, 5, 2, tuple((i + 2 * j) % 5 for i in range(n) for j in range(m))))
    if family == "hypergrid":
        dims = [int(d) for d in args]
        k = len(dims)
        if k < 1 or any(d < 3 or d % (k + 1) for d in dims):
            raise ParameterError(f"hypergrid coloring needs {k + 1} | every dimension (each >= 3)")
        g = reduce(lambda a, b: product(a, b), [cycle(d) for d in dims])
        colors = []
        for v in range(g.n):
            coords, rest = [], v
            for d in reversed(dims):
                coords.append(rest % d)
                rest //= d
            coords.reverse()
            colors.append(sum((j + 1) * x for j, x in enumerate(coords)) % (k + 1))
        return _checked(NEColoring(g, k + 1, 2, tuple(colors)))
    raise ParameterError(f"unknown NE family {family!r}")


# -- the induced orientation ------------------------------------------------------------


def eulerian_arcs(g: SimpleGraph, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Orient an even-degree edge set along Euler circuits of its components."""
    h = nx.Graph()
    h.add_edges_from(edges)
    arcs = []
    for comp in sorted(nx.connected_components(h), key=min):
        sub = h.subgraph(comp)
        if not nx.is_eulerian(sub):
            raise IntegrityError(f"component containing {min(comp)} has an odd-degree vertex")
        arcs.extend(nx.eulerian_circuit(sub, source=min(comp)))
    return arcs


def orientation_from_ne(c: NEColoring) -> tuple[Digraph, StrategyCertificate]:
    """Eulerian orientation per color pair and the class-shift multimove certificate."""
    if c.l % 2:
        raise ParameterError(f"need an even per-class count l, got l={c.l}")
    report = ne_verify(c)
    if not report:
        raise ParameterError(f"not an NE coloring: {report.violations[0]}")
    g = c.graph
    by_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in g.edges:
        key = tuple(sorted((c.colors[u], c.colors[v])))
        by_pair.setdefault(key, []).append((u, v))
    arcs = []
    for key in sorted(by_pair):
        arcs.extend(eulerian_arcs(g, by_pair[key]))
    d = Digraph(g.n, arcs)
    if len(d.arcs) != g.m:
        raise IntegrityError("Euler orientation lost or duplicated an edge")
    return d, class_shift_certificate(d, c.classes, label=f"NE ({c.k},{c.l}) class shift")


def class_shift_certificate(d: Digraph, configs, extra: int = 0, label: str = "") -> StrategyCertificate:
    """Configurations ``class_i | extra``; an attack on a vertex of class ``j`` shifts to class ``j``."""
    configs = tuple(cls | extra for cls in configs)
    owner = {}
    for j, cls in enumerate(configs):
        for v in range(d.n):
            if cls >> v & 1 and not extra >> v & 1:
                owner.setdefault(v, j)
    responses = {}
    for i, s in enumerate(configs):
        for r in range(d.n):
            if not s >> r & 1:
                if r not in owner:
                    raise IntegrityError(f"vertex {r} lies in no class")
                responses[(i, r)] = owner[r]
    k = configs[0].bit_count()
    return StrategyCertificate(d, k, configs, responses, "multimove", label)


def hall_check(d: Digraph, classes) -> bool:
    """Every ordered pair of classes admits a perfect multimove."""
    return all(find_multimove(d, a, b) is not None
               for a in classes for b in classes if a != b)


# -- padded toroidal grids ---------------------------------------------------------------


@dataclass(frozen=True)
class PaddedTorus:
    digraph: Digraph
    certificate: StrategyCertificate
    core: tuple[int, int]
    padding: int

    @property
    def bound(self) -> int:
        return self.certificate.k


def toroidal_padding_orientation(n: int, m: int) -> PaddedTorus:
    """Orientation of C_n x C_m from the NE core C_3a x C_3b plus permanently guarded padding.

    Each core wrap-around arc is stretched into an oriented path through the
    padding rows or columns, so a guard crossing the seam pushes the padding
    guards along the path instead.
    """
    if n < 3 or m < 3:
        raise ParameterError(f"toroidal grid needs n, m >= 3, got {n}x{m}")
    a, b = 3 * (n // 3), 3 * (m // 3)
    core_col = ne_build("torus", a, b)
    core, _ = orientation_from_ne(core_col)
    g = toroidal_grid(n, m)

    def vid(i: int, j: int) -> int:
        return i * m + j

    arcs = set()
    for u, v in core.arcs:
        (i1, j1), (i2, j2) = divmod(u, b), divmod(v, b)
        if i1 == i2 and {j1, j2} == {0, b - 1} and b > 2 and m > b:
            # stretch the row seam: (i, b-1) .. (i, m-1) .. (i, 0)
            path = [vid(i1, j) for j in range(b - 1, m)] + [vid(i1, 0)]
            if j1 == 0:
                path.reverse()
            arcs.update(zip(path, path[1:]))
        elif j1 == j2 and {i1, i2} == {0, a - 1} and a > 2 and n > a:
            path = [vid(i, j1) for i in range(a - 1, n)] + [vid(0, j1)]
            if i1 == 0:
                path.reverse()
            arcs.update(zip(path, path[1:]))
        else:
            arcs.add((vid(i1, j1), vid(i2, j2)))
    covered = {tuple(sorted(e)) for e in arcs}
    for u, v in g.edges:
        if (u, v) not in covered:
            arcs.add((u, v))
    d = Digraph(g.n, sorted(arcs))
    if len(d.arcs) != g.m or d.underlying().edges != g.edges:
        raise IntegrityError("padded orientation does not orient the toroidal grid exactly")
    pad = mask_of(vid(i, j) for i in range(n) for j in range(m) if i >= a or j >= b)
    classes = [mask_of(vid(*divmod(v, b)) for v in range(a * b) if cls >> v & 1)
               for cls in core_col.classes]
    cert = class_shift_certificate(d, classes, extra=pad, label=f"padded torus {n}x{m}")
    return PaddedTorus(d, cert, (a, b), pad.bit_count())
