"""Structural decompositions: reachability, SCCs, bridges, blocks, Robbins orientations, automorphisms."""

from __future__ import annotations

from ._bits import bit, iter_bits, members
from .errors import CapabilityError, StructureError
from .graphs import Digraph, SimpleGraph

AUTOMORPHISM_CAP = 12


def reach(d: Digraph, source_mask: int, within: int | None = None, backward: bool = False) -> int:
    """Vertices reachable from ``source_mask`` using only vertices of ``within``."""
    if within is None:
        within = d.vertex_mask
    nbr = d.in_mask if backward else d.out_mask
    seen = source_mask & within
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= nbr[u]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(d: Digraph, within: int | None = None) -> bool:
    """Strong connectivity of ``d`` or of the subdigraph induced by ``within``."""
    if within is None:
        within = d.vertex_mask
    if within == 0:
        return False
    start = within & -within
    return reach(d, start, within) == within and reach(d, start, within, backward=True) == within


def scc(d: Digraph) -> list[list[int]]:
    """Strongly connected components, sources of the condensation first."""
    fwd = [reach(d, bit(v)) for v in range(d.n)]
    bwd = [reach(d, bit(v), backward=True) for v in range(d.n)]
    comps, done = [], 0
    for v in range(d.n):
        if done >> v & 1:
            continue
        c = fwd[v] & bwd[v]
        done |= c
        comps.append((c, fwd[v]))
    # a component that reaches another reaches strictly more vertices
    comps.sort(key=lambda cr: (-cr[1].bit_count(), cr[0] & -cr[0]))
    return [members(c) for c, _ in comps]


def is_acyclic(d: Digraph, within: int | None = None) -> bool:
    """Kahn-style peeling of sources inside ``within``."""
    if within is None:
        within = d.vertex_mask
    left = within
    while left:
        sources = 0
        for v in iter_bits(left):
            if not d.in_mask[v] & left:
                sources |= bit(v)
        if not sources:
            return False
        left &= ~sources
    return True


def distances_to_set(d: Digraph, target: int) -> list[int | None]:
    """Directed distance from every vertex to the set ``target`` (None if unreachable)."""
    dist: list[int | None] = [None] * d.n
    frontier, seen, step = target, target, 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            dist[v] = step
            nxt |= d.in_mask[v]
        frontier = nxt & ~seen
        seen |= frontier
        step += 1
    return dist


def distances_from(d: Digraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * d.n
    frontier, seen, step = bit(source), bit(source), 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            dist[v] = step
            nxt |= d.out_mask[v]
        frontier = nxt & ~seen
        seen |= frontier
        step += 1
    return dist


def connected_components(g: SimpleGraph) -> list[list[int]]:
    seen, comps = 0, []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = bit(v)
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(members(comp))
    return comps


def is_connected(g: SimpleGraph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def _lowpoints(g: SimpleGraph):
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    order = []

    def visit(u: int) -> None:
        disc[u] = low[u] = len(order)
        order.append(u)
        for w in iter_bits(g.adj[u]):
            if disc[w] == -1:
                parent[w] = u
                visit(w)
                low[u] = min(low[u], low[w])
            elif w != parent[u]:
                low[u] = min(low[u], disc[w])

    for v in range(g.n):
        if disc[v] == -1:
            visit(v)
    return disc, low, parent


def bridges(g: SimpleGraph) -> list[tuple[int, int]]:
    disc, low, parent = _lowpoints(g)
    out = []
    for v in range(g.n):
        p = parent[v]
        if p != -1 and low[v] > disc[p]:
            out.append((min(p, v), max(p, v)))
    return sorted(out)


def two_edge_connected_components(g: SimpleGraph) -> list[list[int]]:
    """Connected components after deleting every bridge, ordered by smallest vertex."""
    cut = set(bridges(g))
    h = SimpleGraph(g.n, [e for e in g.edges if e not in cut])
    return connected_components(h)


def is_two_edge_connected(g: SimpleGraph) -> bool:
    return g.n >= 1 and is_connected(g) and not bridges(g)


def biconnected_components(g: SimpleGraph) -> list[list[int]]:
    """Blocks (maximal 2-vertex-connected pieces, bridges included as K2); isolated vertices as singletons."""
    disc = [-1] * g.n
    low = [0] * g.n
    counter = [0]
    stack: list[tuple[int, int]] = []
    blocks: list[list[int]] = []

    def visit(u: int, p: int) -> None:
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        for w in iter_bits(g.adj[u]):
            if disc[w] == -1:
                stack.append((u, w))
                visit(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    block = set()
                    while True:
                        a, b = stack.pop()
                        block.update((a, b))
                        if (a, b) == (u, w):
                            break
                    blocks.append(sorted(block))
            elif w != p and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for v in range(g.n):
        if disc[v] == -1:
            if g.adj[v] == 0:
                blocks.append([v])
                disc[v] = counter[0]
                counter[0] += 1
            else:
                visit(v, -1)
    return sorted(blocks)


def robbins_orientation(g: SimpleGraph) -> Digraph:
    """Strongly connected orientation of a connected bridgeless graph via one DFS."""
    if not is_connected(g):
        raise StructureError("graph is disconnected, so it has no strongly connected orientation")
    br = bridges(g)
    if br:
        raise StructureError(f"edge {br[0]} is a bridge, so no strongly connected orientation exists")
    disc = [-1] * g.n
    parent = [-1] * g.n
    arcs = []
    clock = [0]

    def visit(u: int) -> None:
        disc[u] = clock[0]
        clock[0] += 1
        for w in iter_bits(g.adj[u]):
            if disc[w] == -1:
                parent[w] = u
                arcs.append((u, w))
                visit(w)
            elif w != parent[u] and disc[w] < disc[u]:
                arcs.append((u, w))

    if g.n:
        visit(0)
    return Digraph(g.n, arcs)


def automorphisms(g: SimpleGraph, cap: int = AUTOMORPHISM_CAP) -> list[tuple[int, ...]]:
    """Every automorphism as a tuple ``p`` with ``p[v]`` the image of ``v``; identity first."""
    if g.n > cap:
        raise CapabilityError(f"automorphism search is capped at {cap} vertices, got {g.n}")
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    image = [-1] * n
    found = []

    def extend(v: int, used: int) -> None:
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if used >> w & 1 or deg[w] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != g.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                extend(v + 1, used | bit(w))
        image[v] = -1

    extend(0, 0)
    return found
