"""Independent brute-force oracle: plain sets and itertools, no bitmasks, no shared code.

Everything here follows the game definitions literally and is only meant for
graphs with a handful of vertices.
"""

from itertools import combinations, product

import networkx as nx


def out_nbrs(n, arcs):
    out = {v: set() for v in range(n)}
    for u, v in arcs:
        out[u].add(v)
    return out


def dominates(n, arcs, s):
    out = out_nbrs(n, arcs)
    covered = set(s)
    for u in s:
        covered |= out[u]
    return covered == set(range(n))


def single_moves(n, arcs, s, r):
    """Configurations after one guard steps along an arc onto the attacked vertex r."""
    return [frozenset(s - {u} | {r}) for u, v in arcs if u in s and v == r]


def multimoves(n, arcs, s):
    out = out_nbrs(n, arcs)
    guards = sorted(s)
    targets = set()
    for choice in product(*[[g] + sorted(out[g]) for g in guards]):
        if len(set(choice)) == len(choice):
            targets.add(frozenset(choice))
    return targets


def winning_region(n, arcs, k, multimove=False):
    """Greatest set W of k-subsets such that every attack from a member can be answered inside W."""
    w = {frozenset(c) for c in combinations(range(n), k)}
    while True:
        keep = set()
        for s in w:
            ok = True
            nexts = multimoves(n, arcs, s) if multimove else None
            for r in set(range(n)) - s:
                if multimove:
                    moves = [t for t in nexts if r in t]
                else:
                    moves = single_moves(n, arcs, s, r)
                if not any(t in w for t in moves):
                    ok = False
                    break
            if ok:
                keep.add(s)
        if keep == w:
            return w
        w = keep


def eternal_number(n, arcs, multimove=False):
    for k in range(n + 1):
        if winning_region(n, arcs, k, multimove):
            return k
    raise AssertionError("all vertices always win")


def acyclic_number(n, arcs):
    for size in range(n, -1, -1):
        for c in combinations(range(n), size):
            h = nx.DiGraph()
            h.add_nodes_from(c)
            h.add_edges_from((u, v) for u, v in arcs if u in c and v in c)
            if nx.is_directed_acyclic_graph(h):
                return size


def domination(n, arcs):
    for size in range(n + 1):
        for c in combinations(range(n), size):
            if dominates(n, arcs, set(c)):
                return size


def orientations(edges):
    for bits in product((False, True), repeat=len(edges)):
        yield [(v, u) if b else (u, v) for (u, v), b in zip(edges, bits)]


def oriented(n, edges, fn):
    """Minimum of ``fn(n, arcs)`` over every orientation, no symmetry reduction."""
    return min(fn(n, arcs) for arcs in orientations(edges))


def symmetric_arcs(edges):
    return [a for u, v in edges for a in ((u, v), (v, u))]


def dominating_dominated_scc(n, arcs):
    """Smallest S, strongly connected, with every outside vertex having an arc into S and an arc from S."""
    best = None
    for size in range(1, n + 1):
        for c in combinations(range(n), size):
            s = set(c)
            h = nx.DiGraph()
            h.add_nodes_from(s)
            h.add_edges_from((u, v) for u, v in arcs if u in s and v in s)
            if not nx.is_strongly_connected(h):
                continue
            outside = set(range(n)) - s
            if all(any((v, u) in arcs for u in s) and any((u, v) in arcs for u in s) for v in outside):
                return size
    return best
