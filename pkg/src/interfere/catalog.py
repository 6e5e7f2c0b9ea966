"""Exhaustive isomorphism-free catalogs of small graphs.

Graphs on n vertices are produced by augmenting every (n-1)-vertex
representative with one new vertex attached in each of the 2^(n-1) possible
ways, then deduplicating by an exact canonical certificate.  The certificate
is the minimum upper-triangle adjacency code over all vertex orderings
compatible with the stable color-refinement partition; refinement classes cut
the ordering space to a tractable size at these orders.

Known totals used by the tests: 1, 2, 4, 11, 34, 156, 1044 graphs and
1, 1, 2, 6, 21, 112, 853 connected graphs on 1..7 vertices.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import List, Tuple

from .bitset import iter_bits
from .errors import CapExceededError
from .graphs import Graph, is_connected

MAX_CATALOG_N = 8


def _refine_colors(G: Graph) -> List[int]:
    colors = [G.degree(v) for v in G.vertices()]
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(G.adj[v]))))
            for v in G.vertices()
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _code_for_order(G: Graph, order: Tuple[int, ...]) -> int:
    code = 0
    for i in range(G.n):
        row = G.adj[order[i]]
        for j in range(i + 1, G.n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def certificate(G: Graph) -> Tuple[int, int]:
    """Exact isomorphism certificate: (n, minimal adjacency code)."""
    colors = _refine_colors(G)
    classes: dict[int, list[int]] = {}
    for v in G.vertices():
        classes.setdefault(colors[v], []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    best = None
    for perm_parts in product(*(permutations(g) for g in groups)):
        order = tuple(v for part in perm_parts for v in part)
        code = _code_for_order(G, order)
        if best is None or code < best:
            best = code
    return (G.n, best)


def _graph_from_certificate(cert: Tuple[int, int]) -> Graph:
    n, code = cert
    edges = []
    pos = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            pos -= 1
            if code >> pos & 1:
                edges.append((i, j))
    return Graph(n, edges)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> Tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("catalog needs n >= 1")
    if n > MAX_CATALOG_N:
        raise CapExceededError(f"graph catalog capped at n <= {MAX_CATALOG_N}")
    if n == 1:
        return (Graph(1),)
    reps: dict[Tuple[int, int], None] = {}
    for G in all_graphs(n - 1):
        base = list(G.edges)
        for mask in range(1 << (n - 1)):
            edges = base + [(v, n - 1) for v in iter_bits(mask)]
            reps.setdefault(certificate(Graph(n, edges)))
    certs = sorted(reps, key=lambda c: (bin(c[1]).count("1"), c[1]))
    return tuple(_graph_from_certificate(c) for c in certs)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> Tuple[Graph, ...]:
    """All connected graphs on exactly n vertices, one per isomorphism class."""
    return tuple(G for G in all_graphs(n) if is_connected(G))


def graphs_upto(n: int) -> List[Graph]:
    return [G for k in range(1, n + 1) for G in all_graphs(k)]


def connected_graphs_upto(n: int) -> List[Graph]:
    return [G for k in range(1, n + 1) for G in connected_graphs(k)]
