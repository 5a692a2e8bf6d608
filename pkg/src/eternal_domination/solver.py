"""Exact eternal and m-eternal domination numbers of digraphs.

For a fixed guard count ``k`` the winning configurations form the greatest
family ``X`` of ``k``-subsets in which every attack on an empty vertex can be
answered by a move into ``X``. We start from all dominating ``k``-subsets and
delete configurations until nothing changes; a per-(configuration, vertex)
counter of live successors makes each deletion cost proportional to the
predecessors it touches.

Guards are unlabeled and never share a vertex, and configuration size is
preserved by every move, so families are stratified by ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ._bits import bit, iter_bits, members, subsets_of_size
from .errors import IntegrityError, ParameterError
from .graphs import Digraph, SimpleGraph, as_digraph
from .invariants import DEFAULT_CAP, _check_cap, alpha_digraph, domination_number, is_dominating
from .matching import multimove_targets
from .strategy import StrategyCertificate

SINGLE = "single_move"
MULTI = "multimove"


@dataclass(frozen=True)
class ConfigFamily:
    n: int
    k: int
    members: frozenset[int]

    def __contains__(self, config: int) -> bool:
        return config in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __bool__(self) -> bool:
        return bool(self.members)

    def as_lists(self) -> list[list[int]]:
        return [members(c) for c in self]


@dataclass(frozen=True)
class GameResult:
    value: int
    winning_family: ConfigFamily
    lower_bound_used: int
    mode: str = SINGLE


def _check_mode(mode: str) -> None:
    if mode not in (SINGLE, MULTI):
        raise ParameterError(f"mode must be {SINGLE!r} or {MULTI!r}, got {mode!r}")


def successors(d: Digraph, s: int, mode: str) -> set[int]:
    """Configurations reachable from ``s`` by one legal response to some attack."""
    out = set()
    if mode == SINGLE:
        empty = d.vertex_mask & ~s
        for v in iter_bits(s):
            for r in iter_bits(d.out_mask[v] & empty):
                out.add(s ^ bit(v) ^ bit(r))
    else:
        out = multimove_targets(d, s)
        out.discard(s)
    return out


def fixed_point(d: Digraph, k: int, mode: str = SINGLE, cap: int = DEFAULT_CAP) -> ConfigFamily:
    """Greatest family of ``k``-configurations closed under defense."""
    _check_mode(mode)
    n = d.n
    if not 0 <= k <= n:
        raise ParameterError(f"guard count must lie in 0..{n}, got {k}")
    _check_cap(n, cap)
    vmask = d.vertex_mask
    configs = [s for s in subsets_of_size(n, k) if is_dominating(d, s)]
    index = {s: i for i, s in enumerate(configs)}
    preds: list[list[int]] = [[] for _ in configs]
    # live[i][r]: live successors of configs[i] that put a guard on empty vertex r
    live: list[list[int]] = []
    for i, s in enumerate(configs):
        cnt = [0] * n
        for t in successors(d, s, mode):
            j = index.get(t)
            if j is None:
                continue
            preds[j].append(i)
            for r in iter_bits(t & ~s):
                cnt[r] += 1
        live.append(cnt)

    alive = [True] * len(configs)
    doomed = []
    for i, s in enumerate(configs):
        cnt = live[i]
        if any(cnt[r] == 0 for r in iter_bits(vmask & ~s)):
            alive[i] = False
            doomed.append(i)
    while doomed:
        j = doomed.pop()
        t = configs[j]
        for i in preds[j]:
            if not alive[i]:
                continue
            cnt = live[i]
            for r in iter_bits(t & ~configs[i]):
                cnt[r] -= 1
                if cnt[r] == 0:
                    alive[i] = False
                    doomed.append(i)
                    break
            # an already-doomed predecessor keeps stale counters; it is never revisited
    return ConfigFamily(n, k, frozenset(s for s, a in zip(configs, alive) if a))


def eternal_fixed_point(d: Digraph, k: int, cap: int = DEFAULT_CAP) -> ConfigFamily:
    return fixed_point(d, k, SINGLE, cap)


def meternal_fixed_point(d: Digraph, k: int, cap: int = DEFAULT_CAP) -> ConfigFamily:
    return fixed_point(d, k, MULTI, cap)


def defense(d: Digraph, s: int, r: int, family: ConfigFamily | frozenset[int] | set[int],
            mode: str) -> int | None:
    """Smallest configuration in ``family`` answering an attack on ``r`` at ``s``, or None."""
    best = None
    for t in successors(d, s, mode):
        if t >> r & 1 and t in family and (best is None or t < best):
            best = t
    return best


def solve(d: Digraph | SimpleGraph, mode: str = SINGLE, start: int | None = None,
          below: int | None = None, cap: int = DEFAULT_CAP) -> GameResult | None:
    """Scan ``k`` upward from ``start`` and return the first winning guard count.

    ``start`` defaults to the inequality-chain lower bound (alpha for single moves,
    domination number for multimoves). With ``below`` set, only ``k < below``
    is tried and None means no such ``k`` wins.
    """
    _check_mode(mode)
    d = as_digraph(d)
    if start is None:
        start = alpha_digraph(d, cap).value if mode == SINGLE else domination_number(d, cap).value
    stop = d.n if below is None else min(d.n, below - 1)
    for k in range(start, stop + 1):
        fam = fixed_point(d, k, mode, cap)
        if fam:
            return GameResult(k, fam, start, mode)
    if below is None:
        raise IntegrityError("the full vertex set must always be winning")
    return None


def gamma_inf(d: Digraph | SimpleGraph, cap: int = DEFAULT_CAP) -> GameResult:
    return solve(d, SINGLE, cap=cap)


def gamma_inf_m(d: Digraph | SimpleGraph, cap: int = DEFAULT_CAP) -> GameResult:
    return solve(d, MULTI, cap=cap)


def is_eds(d: Digraph | SimpleGraph, s: int) -> bool:
    d = as_digraph(d)
    return s in fixed_point(d, s.bit_count(), SINGLE)


def is_meds(d: Digraph | SimpleGraph, s: int) -> bool:
    d = as_digraph(d)
    return s in fixed_point(d, s.bit_count(), MULTI)


def closure_violation(d: Digraph, family, mode: str) -> tuple[int, int] | None:
    """First ``(S, r)`` in ``family`` with no defense staying inside it."""
    fam = frozenset(family)
    for s in sorted(fam):
        for r in iter_bits(d.vertex_mask & ~s):
            if defense(d, s, r, fam, mode) is None:
                return s, r
    return None


def extract_strategy(d: Digraph, family: ConfigFamily, mode: str = SINGLE,
                     label: str = "") -> StrategyCertificate:
    """Response table choosing the smallest valid successor mask for every attack."""
    _check_mode(mode)
    if not family:
        raise IntegrityError("cannot extract a strategy from an empty family")
    configs = tuple(sorted(family.members))
    index = {s: i for i, s in enumerate(configs)}
    fam = frozenset(configs)
    responses = {}
    for i, s in enumerate(configs):
        for r in iter_bits(d.vertex_mask & ~s):
            t = defense(d, s, r, fam, mode)
            if t is None:
                raise IntegrityError(
                    f"family is not closed: attack on {r} at {members(s)} has no defense")
            responses[(i, r)] = index[t]
    return StrategyCertificate(d, family.k, configs, responses, mode, label)
