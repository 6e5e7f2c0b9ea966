"""Dominating sets and exact enumeration of the minimal ones."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .bitset import bit_list, iter_bits
from .errors import CapExceededError
from .graphs import Graph, closed_neighborhood, fingerprint


def is_dominating(G: Graph, D: int) -> bool:
    """True when every vertex is in D or adjacent to it; empty D never dominates."""
    if D == 0:
        return False
    covered = D
    for v in iter_bits(D):
        covered |= G.adj[v]
    return covered == G.full_mask


def is_minimal_dominating(G: Graph, D: int) -> bool:
    """Dominating, and removing any single vertex breaks domination."""
    if not is_dominating(G, D):
        return False
    return all(not is_dominating(G, D & ~(1 << v)) for v in iter_bits(D))


@dataclass(frozen=True)
class DominatingSetFamily:
    """Canonically ordered family of vertex-set masks tied to a host graph."""

    n: int
    sets: Tuple[int, ...]
    graph_hash: str

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def as_lists(self) -> List[List[int]]:
        return [bit_list(D) for D in self.sets]


def _canonical_order(sets) -> Tuple[int, ...]:
    return tuple(sorted(sets, key=lambda D: (D.bit_count(), bit_list(D))))


def minimal_dominating_sets(G: Graph, cap: int = 16) -> DominatingSetFamily:
    """Every minimal dominating set, ordered by size then lexicographically.

    Branches on an uncovered vertex with the fewest remaining candidate
    dominators; sibling branches exclude earlier candidates so no chosen set
    is revisited.  Non-minimal leaves are filtered by the direct definition.
    """
    if G.n > cap:
        raise CapExceededError(f"minimal_dominating_sets: n={G.n} exceeds cap {cap}")
    closed = [closed_neighborhood(G, v) for v in G.vertices()]
    found = set()

    def rec(chosen: int, covered: int, forbidden: int) -> None:
        if covered == G.full_mask:
            if is_minimal_dominating(G, chosen):
                found.add(chosen)
            return
        best_u, best_cands = -1, -1
        uncovered = G.full_mask & ~covered
        for u in iter_bits(uncovered):
            cands = closed[u] & ~forbidden
            if best_u < 0 or cands.bit_count() < best_cands.bit_count():
                best_u, best_cands = u, cands
        if best_cands == 0:
            return
        excl = 0
        for v in iter_bits(best_cands):
            rec(chosen | (1 << v), covered | closed[v], forbidden | excl)
            excl |= 1 << v

    rec(0, 0, 0)
    return DominatingSetFamily(G.n, _canonical_order(found), fingerprint(G)["edge_hash"])


def all_dominating_sets(G: Graph, cap: int = 16) -> Tuple[int, ...]:
    """Every dominating set, by direct filter of all nonempty subsets."""
    if G.n > cap:
        raise CapExceededError(f"all_dominating_sets: n={G.n} exceeds cap {cap}")
    return _canonical_order(D for D in range(1, 1 << G.n) if is_dominating(G, D))
