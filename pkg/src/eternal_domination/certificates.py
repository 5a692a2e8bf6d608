"""Builders for explicit defender strategies on the orientations from the constructive bounds.

Each builder fixes an orientation and the invariant family of configurations
the defense maintains; the response table is then filled in by searching that
family for a legal answer to every attack, which fails loudly if the family
is not closed. ``verify_strategy`` re-checks the result independently.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian

from ._bits import bit, mask_of
from .closed_forms import _split, oednm2_characterization, trivially_perfect_structure
from .errors import CapabilityError, IntegrityError, ParameterError
from .families import complete_bipartite, grid
from .graphs import Digraph, SimpleGraph
from .solver import MULTI, SINGLE, ConfigFamily, eternal_fixed_point, extract_strategy
from .strategy import StrategyCertificate, verify_strategy

CONFIG_CAP = 200_000

# The unique optimal orientation of the 3x3 grid; vertex (x, y) is 3x + y.
FIGURE3_ARCS = (
    (0, 1), (1, 2), (2, 5), (5, 8), (8, 7), (7, 6), (6, 3), (3, 0),  # boundary 8-cycle
    (1, 4), (4, 3), (7, 4), (4, 5),                                  # through the center
)


def _from_family(d: Digraph, configs, mode: str, label: str) -> StrategyCertificate:
    configs = frozenset(configs)
    sizes = {c.bit_count() for c in configs}
    if len(sizes) != 1:
        raise IntegrityError(f"{label}: configurations have mixed sizes {sorted(sizes)}")
    fam = ConfigFamily(d.n, sizes.pop(), configs)
    try:
        return extract_strategy(d, fam, mode, label)
    except IntegrityError as exc:
        raise IntegrityError(f"{label}: {exc}") from exc


def _orient_with(g: SimpleGraph, chosen) -> Digraph:
    """Use the given arcs for their edges and orient every other edge low -> high."""
    direction = {}
    for u, v in chosen:
        e = (min(u, v), max(u, v))
        if not g.has_edge(*e):
            raise IntegrityError(f"arc ({u}, {v}) is not an edge of the graph")
        direction[e] = (u, v)
    return Digraph(g.n, [direction.get(e, e) for e in g.edges])


# -- cycles and complete bipartite graphs -----------------------------------------------


def build_cycle_cert(n: int, mode: str = SINGLE) -> StrategyCertificate:
    """Cyclic orientation of C_n: all but one vertex (single moves) or a rotating half (multimoves)."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    d = Digraph(n, [(i, (i + 1) % n) for i in range(n)])
    full = (1 << n) - 1
    if mode == SINGLE:
        configs = tuple(full & ~bit(v) for v in range(n))
        # the guard behind the attacked vertex steps forward
        responses = {(i, i): (i - 1) % n for i in range(n)}
        return StrategyCertificate(d, n - 1, configs, responses, SINGLE, f"cyclic C{n}")
    if mode != MULTI:
        raise ParameterError(f"unknown mode {mode!r}")
    k = -(-n // 2)
    base = [2 * i for i in range(k)]
    configs = sorted({mask_of((v + s) % n for v in base) for s in range(n)})
    index = {c: i for i, c in enumerate(configs)}
    responses = {}
    for i, c in enumerate(configs):
        # every guard steps forward; the rotated set covers every empty vertex
        nxt = index[mask_of((v + 1) % n for v in range(n) if c >> v & 1)]
        for r in range(n):
            if not c >> r & 1:
                responses[(i, r)] = nxt
    return StrategyCertificate(d, k, tuple(configs), responses, MULTI, f"rotating C{n}")


def build_knn_cert(n: int) -> StrategyCertificate:
    """K_{n,n} with matching arcs a_i -> b_i and all other arcs b_j -> a_i; n + 1 guards.

    Invariant: every matching edge holds a guard and exactly one holds two.
    """
    if n < 1:
        raise ParameterError("need n >= 1")
    g = complete_bipartite(n, n)
    d = _orient_with(g, [(i, n + i) for i in range(n)]
                     + [(n + j, i) for i in range(n) for j in range(n) if i != j])
    configs = []
    for doubled in range(n):
        rest = [i for i in range(n) if i != doubled]
        for side in cartesian((0, 1), repeat=len(rest)):
            configs.append(bit(doubled) | bit(n + doubled)
                           | mask_of(i + n * s for i, s in zip(rest, side)))
    return _from_family(d, configs, SINGLE, f"K{n},{n} matching")


def build_knm4_cert(n: int, m: int) -> StrategyCertificate:
    """Four guards rotating through A1 -> B1 -> A2 -> B2 -> A1 on K_{n,m}."""
    if n < 2 or m < 2:
        raise ParameterError(f"both parts need at least 2 vertices, got {n}, {m}")
    g = complete_bipartite(n, m)
    a1, b1 = 0, n
    a2 = range(1, n)
    b2 = range(n + 1, n + m)
    arcs = [(a1, b1)] + [(b1, a) for a in a2] + [(a, b) for a in a2 for b in b2] + [(b, a1) for b in b2]
    d = _orient_with(g, arcs)
    configs = [bit(a1) | bit(b1) | bit(a) | bit(b) for a in a2 for b in b2]
    return _from_family(d, configs, MULTI, f"K{n},{m} four-part rotation")


# -- block composition --------------------------------------------------------------


def _single_vertex_cert() -> StrategyCertificate:
    return StrategyCertificate(Digraph(1), 1, (1,), {}, SINGLE, "permanent guard")


def combine_blocks(d: Digraph, parts, mode: str, label: str = "",
                   cap: int = CONFIG_CAP) -> StrategyCertificate:
    """Run independent strategies on disjoint vertex blocks side by side.

    ``parts`` is a list of ``(labels, cert)`` with ``labels[i]`` the global
    vertex of local vertex ``i``. Guards never cross blocks, so an attack is
    answered by the strategy of the block it lands in.
    """
    covered = 0
    lifted = []
    for labels, cert in parts:
        for u, v in cert.digraph.arcs:
            if not d.has_arc(labels[u], labels[v]):
                raise IntegrityError(f"{label}: block arc ({labels[u]}, {labels[v]}) missing")
        block = mask_of(labels)
        if block & covered:
            raise IntegrityError(f"{label}: blocks overlap")
        covered |= block
        lifted.append(tuple(mask_of(labels[v] for v in range(len(labels)) if c >> v & 1)
                            for c in cert.configs))
    if covered != d.vertex_mask:
        raise IntegrityError(f"{label}: blocks do not cover every vertex")
    total = 1
    for confs in lifted:
        total *= len(confs)
    if total > cap:
        raise CapabilityError(f"{label}: {total} combined configurations exceed the cap {cap}")
    radix = [len(c) for c in lifted]
    owner = {}
    for b, (labels, _) in enumerate(parts):
        for local, v in enumerate(labels):
            owner[v] = (b, local)
    configs, responses = [], {}
    for combo in cartesian(*[range(r) for r in radix]):
        configs.append(sum(lifted[b][i] for b, i in enumerate(combo)))
    stride = [1] * len(radix)
    for b in range(len(radix) - 2, -1, -1):
        stride[b] = stride[b + 1] * radix[b + 1]
    for idx, combo in enumerate(cartesian(*[range(r) for r in radix])):
        for v in range(d.n):
            if configs[idx] >> v & 1:
                continue
            b, local = owner[v]
            nxt = parts[b][1].responses[(combo[b], local)]
            responses[(idx, v)] = idx + (nxt - combo[b]) * stride[b]
    k = configs[0].bit_count()
    return StrategyCertificate(d, k, tuple(configs), responses, mode, label)


# -- grids ----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def figure3_certificate() -> StrategyCertificate:
    d = Digraph(9, FIGURE3_ARCS)
    fam = eternal_fixed_point(d, 7)
    if not fam:
        raise IntegrityError("the hard-coded 3x3 orientation does not defend with 7 guards")
    return extract_strategy(d, fam, SINGLE, "3x3 block")


@lru_cache(maxsize=None)
def square_certificate() -> StrategyCertificate:
    # local (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3, oriented as the 4-cycle 0 -> 1 -> 3 -> 2 -> 0
    succ = {0: 1, 1: 3, 3: 2, 2: 0}
    d = Digraph(4, succ.items())
    pred = {w: v for v, w in succ.items()}
    configs = tuple(15 & ~bit(v) for v in range(4))
    responses = {(v, v): pred[v] for v in range(4)}
    return StrategyCertificate(d, 3, configs, responses, SINGLE, "2x2 block")


def grid_tiling(n: int, m: int) -> list[tuple[int, int, int, int]]:
    """Blocks ``(row, col, height, width)`` of the tiling behind the grid upper bound."""
    q, y = _split(n)
    p, x = _split(m)
    rows3, cols3 = 3 * q, 3 * p
    blocks = [(3 * i, 3 * j, 3, 3) for i in range(q) for j in range(p)]

    def strip(r0: int, c0: int, length: int, horizontal: bool) -> None:
        for s in range(0, length - 1, 2):
            blocks.append((r0, c0 + s, 2, 2) if horizontal else (r0 + s, c0, 2, 2))
        if length % 2:
            last = length - 1
            for t in range(2):
                blocks.append((r0 + t, c0 + last, 1, 1) if horizontal else (r0 + last, c0 + t, 1, 1))

    for t in range(y):
        strip(rows3 + 2 * t, 0, cols3, True)
    for t in range(x):
        strip(0, cols3 + 2 * t, rows3, False)
    for i in range(y):
        for j in range(x):
            blocks.append((rows3 + 2 * i, cols3 + 2 * j, 2, 2))
    return blocks


def build_grid_tiling_cert(n: int, m: int, cap: int = CONFIG_CAP) -> StrategyCertificate:
    """Single-move strategy for P_n x P_m from 3x3, 2x2 and 1x1 blocks."""
    if n < 2 or m < 2:
        raise ParameterError(f"grid sides must be at least 2, got {n}x{m}")
    g = grid(n, m)
    local = {3: figure3_certificate(), 2: square_certificate(), 1: _single_vertex_cert()}
    parts, arcs = [], []
    for r0, c0, h, w in grid_tiling(n, m):
        cert = local[h]
        labels = [(r0 + i) * m + (c0 + j) for i in range(h) for j in range(w)]
        parts.append((labels, cert))
        arcs.extend((labels[u], labels[v]) for u, v in cert.digraph.arcs)
    d = _orient_with(g, arcs)
    return combine_blocks(d, parts, SINGLE, f"grid {n}x{m} tiling", cap)


# -- two guards and trivially perfect graphs ---------------------------------------------


def build_two_guard_cert(g: SimpleGraph) -> StrategyCertificate:
    """Two-guard multimove strategy on a complete graph minus a small matching."""
    if not oednm2_characterization(g):
        raise ParameterError("graph is not a complete graph minus a small enough matching")
    n = g.n
    comp = g.complement()
    missing = [list(e) for e in comp.edges]
    used = mask_of(v for e in missing for v in e)
    free = [v for v in range(n) if not used >> v & 1]
    k = n // 2
    chosen = []
    z = None
    if n % 2:
        z, first, second = free[:3]
        free = free[3:]
        pairs = [[first, second]] + missing
    else:
        pairs = list(missing)
    while len(pairs) < k:
        pairs.append([free.pop(0), free.pop(0)])
    order = [p[0] for p in pairs] + [p[1] for p in pairs]  # v_i and v_{i+k} are paired
    for j in range(2 * k):
        for i in range(j + 1, 2 * k):
            vi, vj = order[i], order[j]
            if not g.has_edge(vi, vj):
                continue
            if i - j < k:
                chosen.append((vi, vj))
            elif i - j > k or z is None or j != 0:
                chosen.append((vj, vi))
    configs = [bit(order[i]) | bit(order[i + k]) for i in range(k)]
    if z is not None:
        v0, vk = order[0], order[k]
        chosen.append((v0, vk))
        chosen += [(vk, z), (z, v0)]
        out0 = {b for a, b in chosen if a == v0}
        for w in order:
            if w not in (v0, vk):
                chosen.append((z, w) if w in out0 else (w, z))
        configs.append(bit(z) | bit(vk))
    d = _orient_with(g, chosen)
    return _from_family(d, configs, MULTI, "two guards")


def _plus2_family(g: SimpleGraph, x: int, blocks) -> tuple[list, list[int]]:
    """Arcs and configurations for the l + 2 strategy around universal vertex ``x``."""
    arcs, hubs = [], []
    for block in blocks:
        others = [v for v in block if v != x]
        hub = next(v for v in others if all(g.has_edge(v, w) for w in others if w != v))
        hubs.append(hub)
        arcs.append((hub, x))
        for v in others:
            if v != hub:
                arcs.append((x, v))
                arcs.append((v, hub))
    configs = []
    for special, block in enumerate(blocks):
        extra = [v for v in block if v not in (x, hubs[special])]
        if not extra:
            continue
        choices = [[v for v in b if v != x] for i, b in enumerate(blocks) if i != special]
        for e in extra:
            for pick in cartesian(*choices):
                configs.append(bit(x) | bit(hubs[special]) | bit(e) | mask_of(pick))
    return arcs, configs


def build_trivially_perfect_cert(g: SimpleGraph) -> StrategyCertificate:
    """Multimove strategy matching the trivially perfect case analysis."""
    st = trivially_perfect_structure(g)
    x, blocks = st.universal, st.blocks
    label = f"trivially perfect ({st.case})"
    if st.case == "single-large-block":
        big = next(b for b in blocks if len(b) >= 3)
        sub, labels = g.induced(big)
        if oednm2_characterization(sub):
            inner = build_two_guard_cert(sub)
        else:
            sx = labels.index(x)
            arcs, configs = _plus2_family(sub, sx, [list(range(sub.n))])
            inner = _from_family(_orient_with(sub, arcs), configs, MULTI, "three guards")
        parts = [(labels, inner)]
        arcs = [(labels[u], labels[v]) for u, v in inner.digraph.arcs]
        for b in blocks:
            if len(b) == 2:
                leaf = b[0] if b[1] == x else b[1]
                parts.append(([leaf], _single_vertex_cert()))
        d = _orient_with(g, arcs)
        if len(parts) == 1:
            return StrategyCertificate(d, inner.k, inner.configs, inner.responses, MULTI, label)
        return combine_blocks(d, parts, MULTI, label)
    if st.case == "small-blocks":
        arcs, choices = [], []
        for b in blocks:
            others = [v for v in b if v != x]
            if len(others) == 2:
                a, c = others
                arcs += [(x, a), (a, c), (c, x)]
            else:
                arcs.append((x, others[0]))
            choices.append(others)
        configs = [bit(x) | mask_of(pick) for pick in cartesian(*choices)]
        return _from_family(_orient_with(g, arcs), configs, MULTI, label)
    arcs, configs = _plus2_family(g, x, [list(b) for b in blocks])
    return _from_family(_orient_with(g, arcs), configs, MULTI, label)


def certify(cert: StrategyCertificate) -> int:
    return verify_strategy(cert)
