"""Distance patterns: labeling vertices by their sets of distances to a marker set.

For a connected graph and a nonempty marker set M, vertex u gets
f(u) = { d(u, v) : v in M }, a subset of {0..diameter}.  When these sets are
pairwise distinct M is distance-pattern distinguishing (a DPD set), and the
labeling can be tested as an interference of M with respect to the complete
graph on V.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .bitset import bit_list, iter_bits, mask_of
from .core import SetLabeling, is_interference, is_valid_labeling
from .families import complete
from .graphs import Graph, bfs_distances, diameter, is_connected


@dataclass(frozen=True)
class DistancePattern:
    """Per-vertex distance sets encoded as masks over ground set {0..diameter}."""

    ground_size: int
    patterns: Tuple[int, ...]

    def as_sets(self) -> List[List[int]]:
        return [bit_list(p) for p in self.patterns]

    def labeling(self) -> SetLabeling:
        return SetLabeling(self.ground_size, self.patterns)


def distance_pattern(G: Graph, M: int) -> DistancePattern:
    """Distance sets of every vertex to the markers; needs a connected graph."""
    if M == 0:
        raise ValueError("marker set must be nonempty")
    if M >> G.n:
        raise ValueError("marker set has vertices outside the graph")
    if not is_connected(G):
        raise ValueError("distance patterns need a connected graph")
    patterns = [0] * G.n
    for v in iter_bits(M):
        dist = bfs_distances(G, v)
        for u in G.vertices():
            patterns[u] |= 1 << dist[u]
    return DistancePattern(diameter(G) + 1, tuple(patterns))


def is_dpd_set(G: Graph, M: int) -> bool:
    """Markers whose distance patterns separate all vertices."""
    pat = distance_pattern(G, M).patterns
    return len(set(pat)) == G.n


def path_dpd_set(n: int) -> int:
    """Marker mask {j(j-1)/2 : 1 <= j <= r} for the n-vertex path, 0-based.

    r is the largest size whose last marker still fits: the unique r with
    r(r-1)/2 <= n-1 < r(r+1)/2.  The gaps grow by one each step, which is
    what makes the resulting distance sets pairwise distinct.
    """
    if n < 4:
        raise ValueError("path construction needs n >= 4")
    r = 1
    while (r + 1) * r // 2 <= n - 1:
        r += 1
    markers = [j * (j - 1) // 2 for j in range(1, r + 1)]
    assert markers[-1] <= n - 1
    return mask_of(markers)


def dpd_interference_check(G: Graph, M: int) -> bool:
    """Whether the distance-pattern labeling interferes for M on the complete graph.

    False whenever two vertices share a pattern (the labeling is not even
    valid); with a valid labeling, every nonmarker's distance set must meet
    some marker's.
    """
    pat = distance_pattern(G, M)
    f = pat.labeling()
    if not is_valid_labeling(f):
        return False
    return is_interference(complete(G.n), M, f)
