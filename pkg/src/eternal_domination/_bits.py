"""Bitmask helpers. Vertex sets are Python ints, bit v set iff v is in the set."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def full(n: int) -> int:
    return (1 << n) - 1


def subsets_of_size(n: int, k: int) -> list[int]:
    """All k-subsets of range(n) as masks, in itertools.combinations order."""
    return [mask_of(c) for c in combinations(range(n), k)]


def subsets_within(universe: int, k: int) -> Iterator[int]:
    for c in combinations(members(universe), k):
        yield mask_of(c)
