"""Small helpers for int-bitmask sets.

Vertex sets, edge sets and label sets are plain Python ints: bit i set means
element i is in the set.  Python's arbitrary-precision ints make this exact at
any size the exact algorithms here can reach.
"""
from __future__ import annotations

from typing import Iterable, Iterator, List


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> List[int]:
    return list(iter_bits(mask))
