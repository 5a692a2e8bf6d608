"""Graph and digraph types, orientations, products and the triangulation gadget.

Vertices are the integers ``0..n-1`` and vertex sets are bitmasks. Edges of a
:class:`SimpleGraph` are kept in the canonical lexicographic order of ``(u, v)``
with ``u < v``; orientation bitstrings index into that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ._bits import bit, full, members
from .errors import CapabilityError, ParameterError

MAX_VERTICES = 64


def _check_order(n: int) -> None:
    if n < 0:
        raise ParameterError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapabilityError(f"at most {MAX_VERTICES} vertices are supported, got {n}")


@dataclass(frozen=True)
class SimpleGraph:
    """Finite undirected graph without loops or multi-edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        _check_order(n)
        seen = set()
        for e in edges:
            if len(e) != 2:
                raise ParameterError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ParameterError(f"duplicate edge {key}")
            seen.add(key)
        adj = [0] * n
        for u, v in seen:
            adj[u] |= bit(v)
            adj[v] |= bit(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | bit(v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def induced(self, vertices: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old labels."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        sub = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return SimpleGraph(len(old), sub), old

    def complement(self) -> "SimpleGraph":
        return SimpleGraph(
            self.n,
            [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)],
        )

    def is_regular(self, degree: int | None = None) -> bool:
        degs = {self.degree(v) for v in range(self.n)}
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}


@dataclass(frozen=True)
class Digraph:
    """Finite digraph without loops; opposite arcs may coexist."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    out_mask: tuple[int, ...] = field(init=False, repr=False, compare=False)
    in_mask: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        _check_order(n)
        seen = set()
        for a in arcs:
            if len(a) != 2:
                raise ParameterError(f"arc {a!r} is not a pair")
            u, v = int(a[0]), int(a[1])
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            seen.add((u, v))
        out, inn = [0] * n, [0] * n
        for u, v in seen:
            out[u] |= bit(v)
            inn[v] |= bit(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(sorted(seen)))
        object.__setattr__(self, "out_mask", tuple(out))
        object.__setattr__(self, "in_mask", tuple(inn))

    @property
    def vertex_mask(self) -> int:
        return full(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def out_neighbors(self, v: int) -> list[int]:
        return members(self.out_mask[v])

    def in_neighbors(self, v: int) -> list[int]:
        return members(self.in_mask[v])

    def closed_out(self, v: int) -> int:
        return self.out_mask[v] | bit(v)

    def reverse(self) -> "Digraph":
        return Digraph(self.n, [(v, u) for u, v in self.arcs])

    def without_arc(self, u: int, v: int) -> "Digraph":
        return Digraph(self.n, [a for a in self.arcs if a != (u, v)])

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Induced subdigraph relabelled to ``0..k-1``; also returns the old labels."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        sub = [(new[u], new[v]) for u, v in self.arcs if u in new and v in new]
        return Digraph(len(old), sub), old

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, {(min(a), max(a)) for a in self.arcs})

    def is_symmetric(self) -> bool:
        return all(self.has_arc(v, u) for u, v in self.arcs)


def symmetric(g: SimpleGraph) -> Digraph:
    """The digraph with both arcs for every edge of ``g``."""
    return Digraph(g.n, [a for u, v in g.edges for a in ((u, v), (v, u))])


def as_digraph(g: SimpleGraph | Digraph) -> Digraph:
    return symmetric(g) if isinstance(g, SimpleGraph) else g


@dataclass(frozen=True)
class Orientation:
    """One direction per canonical edge: bit ``False`` means ``u -> v`` for edge ``(u, v)``."""

    base: SimpleGraph
    bits: tuple[bool, ...]

    def __post_init__(self):
        if len(self.bits) != self.base.m:
            raise ParameterError(
                f"orientation has {len(self.bits)} bits but the graph has {self.base.m} edges"
            )
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))

    @classmethod
    def from_mask(cls, base: SimpleGraph, mask: int) -> "Orientation":
        return cls(base, tuple(bool(mask >> i & 1) for i in range(base.m)))

    @property
    def mask(self) -> int:
        return sum(1 << i for i, b in enumerate(self.bits) if b)

    def arcs(self) -> list[tuple[int, int]]:
        return [(v, u) if b else (u, v) for (u, v), b in zip(self.base.edges, self.bits)]

    def digraph(self) -> Digraph:
        return Digraph(self.base.n, self.arcs())

    def reversed(self) -> "Orientation":
        return Orientation(self.base, tuple(not b for b in self.bits))

    def bitstring(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


def orient(g: SimpleGraph, bits: Sequence[bool]) -> Digraph:
    """Materialize an orientation of ``g`` as a digraph."""
    return Orientation(g, tuple(bits)).digraph()


def orientation_of(g: SimpleGraph, d: Digraph) -> Orientation:
    """Recover the orientation bits of ``d`` over ``g``; ``d`` must orient ``g`` exactly."""
    if d.n != g.n or len(d.arcs) != g.m:
        raise ParameterError("digraph is not an orientation of the graph")
    bits = []
    for u, v in g.edges:
        fwd, back = d.has_arc(u, v), d.has_arc(v, u)
        if fwd == back:
            raise ParameterError(f"edge ({u}, {v}) is not oriented exactly once")
        bits.append(back)
    return Orientation(g, tuple(bits))


def product(g1: SimpleGraph, g2: SimpleGraph, kind: str = "cartesian") -> SimpleGraph:
    """Cartesian or strong product; vertex ``(a, b)`` is numbered ``a * g2.n + b``."""
    if kind not in ("cartesian", "strong"):
        raise ParameterError(f"unknown product kind {kind!r}")
    n2 = g2.n
    edges = set()
    for a in range(g1.n):
        for b1, b2 in g2.edges:
            edges.add((a * n2 + b1, a * n2 + b2))
    for a1, a2 in g1.edges:
        for b in range(n2):
            edges.add((a1 * n2 + b, a2 * n2 + b))
        if kind == "strong":
            for b1, b2 in g2.edges:
                edges.add((a1 * n2 + b1, a2 * n2 + b2))
                edges.add((a1 * n2 + b2, a2 * n2 + b1))
    return SimpleGraph(g1.n * n2, edges)


def triangulation_gadget(g: SimpleGraph) -> SimpleGraph:
    """Add vertex ``n + e`` for each edge ``e`` and join it to both endpoints of ``e``."""
    edges = list(g.edges)
    for e, (u, v) in enumerate(g.edges):
        edges.append((u, g.n + e))
        edges.append((v, g.n + e))
    return SimpleGraph(g.n + g.m, edges)
