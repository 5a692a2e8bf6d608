"""Multimove feasibility as bipartite perfect matching (augmenting paths)."""

from __future__ import annotations

from ._bits import bit, iter_bits, members
from .errors import ParameterError
from .graphs import Digraph


def find_multimove(d: Digraph, source: int, target: int) -> dict[int, int] | None:
    """A guard assignment ``{from: to}`` moving ``source`` onto ``target``, or None.

    Each guard stays put or crosses one arc; the map is injective. Guards
    already on ``target`` are free to stay.
    """
    if source.bit_count() != target.bit_count():
        raise ParameterError("multimove endpoints must have the same number of guards")
    left = members(source)
    options = {u: (d.out_mask[u] | bit(u)) & target for u in left}
    owner: dict[int, int] = {}

    def augment(u: int, visited: int) -> tuple[bool, int]:
        for w in iter_bits(options[u] & ~visited):
            visited |= bit(w)
            if w not in owner:
                owner[w] = u
                return True, visited
            ok, visited = augment(owner[w], visited)
            if ok:
                owner[w] = u
                return True, visited
        return False, visited

    # cheap first pass: guards that can stay put claim their own vertex
    for u in left:
        if target >> u & 1 and u not in owner:
            owner[u] = u
    claimed = set(owner.values())
    for u in left:
        if u in claimed:
            continue
        ok, _ = augment(u, 0)
        if not ok:
            return None
    return {u: w for w, u in owner.items()}


def multimove_exists(d: Digraph, source: int, target: int) -> bool:
    return find_multimove(d, source, target) is not None


def multimove_targets(d: Digraph, source: int, within: int | None = None) -> set[int]:
    """Every configuration reachable from ``source`` by one multimove.

    Enumerated guard by guard over sets of occupied destinations, so equal
    targets reached by different assignments collapse early. ``within``
    restricts destinations to a vertex subset.
    """
    if within is None:
        within = d.vertex_mask
    states = {0}
    for u in iter_bits(source):
        opts = (d.out_mask[u] | bit(u)) & within
        nxt = set()
        for used in states:
            for w in iter_bits(opts & ~used):
                nxt.add(used | bit(w))
        states = nxt
        if not states:
            break
    return states
