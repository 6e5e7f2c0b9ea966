"""Neighborhood-derived labelings and their interference criteria.

Here the graph G plays two roles at once: it *defines* the labeling
(open neighborhoods u -> N(u), or their complements u -> V \\ N(u), over
the ground set V) while the interference condition is taken with respect
to the complete graph on V, so any vertex of the target set may supply
the shared element.  Every predicate in this module is a structural
criterion evaluated on G directly; the definitional route (build the
labeling, run the core predicate) lives in core and is what the tests
compare against.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .bitset import iter_bits
from .core import Pattern, SetLabeling, is_pattern_interference, is_valid_labeling
from .graphs import (
    Graph,
    bfs_distances,
    closed_neighborhood,
    complemented_neighborhood,
    diameter,
    edge_in_triangle,
    induced_subgraph,
    is_connected,
    is_point_determining,
    is_regular,
    second_neighborhood,
)


@dataclass(frozen=True)
class LabelingReport:
    """Validity report for a neighborhood-style labeling of G."""

    injective: bool
    has_empty_label: bool
    labeling: Optional[SetLabeling]
    witness: Optional[Tuple[int, ...]]

    @property
    def valid(self) -> bool:
        return self.labeling is not None


def _report(G: Graph, labels: Tuple[int, ...]) -> LabelingReport:
    empty = next((u for u in G.vertices() if labels[u] == 0), None)
    clash = None
    seen: dict[int, int] = {}
    for u, lab in enumerate(labels):
        if lab in seen:
            clash = (seen[lab], u)
            break
        seen[lab] = u
    injective = clash is None
    if injective and empty is None:
        return LabelingReport(True, False, SetLabeling(G.n, labels), None)
    witness = clash if clash is not None else (empty,)
    return LabelingReport(injective, empty is not None, None, witness)


def neighborhood_labeling(G: Graph) -> LabelingReport:
    """u -> N(u); valid iff G is point-determining with no isolated vertex."""
    return _report(G, G.adj)


def complemented_labeling(G: Graph) -> LabelingReport:
    """u -> V minus N(u); never empty, injective iff G is point-determining."""
    return _report(G, tuple(complemented_neighborhood(G, u) for u in G.vertices()))


def _has_isolated_vertex(G: Graph) -> bool:
    return any(mask == 0 for mask in G.adj)


# ---------------------------------------------------------------------------
# open-neighborhood criteria

def neighborhood_interference_of(G: Graph, D: int) -> bool:
    """Structural test that u -> N(u) interferes for D.

    Needs a point-determining graph without isolated vertices, every outside
    vertex within distance two of D, and, when no distance-two vertex of D
    exists for u, some member of D adjacent to u forming a triangle with it.
    The triangle clause is evaluated both ways (common-neighbor masks, and
    non-isolation inside the induced neighborhood) and must agree.
    """
    if D == 0:
        raise ValueError("D must be nonempty")
    if D >> G.n:
        raise ValueError("D has vertices outside the graph")
    if not is_point_determining(G) or _has_isolated_vertex(G):
        return False
    for u in G.vertices():
        if D >> u & 1:
            continue
        near = G.adj[u] & D
        ring2 = second_neighborhood(G, u) & D
        if near == 0 and ring2 == 0:
            return False  # D out of reach of u
        if ring2 == 0:
            in_triangle = any(G.adj[u] & G.adj[v] for v in iter_bits(near))
            sub, verts = induced_subgraph(G, G.adj[u])
            pos = {v: i for i, v in enumerate(verts)}
            non_isolated = any(sub.adj[pos[v]] != 0 for v in iter_bits(near))
            assert in_triangle == non_isolated, "triangle clause forms disagree"
            if not in_triangle:
                return False
    return True


def neighborhood_complete(G: Graph) -> bool:
    """u -> N(u) pairwise-intersecting and valid: point-determining graph of
    order >= 2 with diameter <= 2 whose every edge lies in a triangle."""
    if G.n < 2 or not is_point_determining(G):
        return False
    if diameter(G) > 2:
        return False
    return all(edge_in_triangle(G, e) for e in G.edges)


def neighborhood_singleton(G: Graph, v: int) -> bool:
    """Interference of the single vertex {v}: everything within distance two
    of v and no isolated vertex inside the induced neighborhood of v."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    if G.n < 2 or not is_point_determining(G):
        return False
    if any(d > 2 for d in bfs_distances(G, v)):
        return False
    if G.adj[v] == 0:
        return False
    sub, _ = induced_subgraph(G, G.adj[v])
    return all(mask != 0 for mask in sub.adj)


def neighborhood_all_but_one(G: Graph, v: int) -> bool:
    """Interference of V minus {v}: v must touch a vertex of degree >= 2."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    if not is_connected(G):
        raise ValueError("all-but-one criterion needs a connected graph")
    if G.n < 2:
        raise ValueError("all-but-one target set is empty for n=1")
    if not is_point_determining(G) or _has_isolated_vertex(G):
        return False
    return any(G.degree(w) >= 2 for w in iter_bits(G.adj[v]))


def two_path_complete(G: Graph) -> bool:
    """Every two distinct vertices joined by a length-two path."""
    return all(
        G.adj[u] & G.adj[v]
        for u in G.vertices()
        for v in range(u + 1, G.n)
    )


# ---------------------------------------------------------------------------
# complemented-neighborhood criteria

def complemented_interference_of(G: Graph, D: int) -> bool:
    """Structural test that u -> V \\ N(u) interferes for D.

    Only vertices adjacent to all of D are at risk: such a u needs a
    nonneighbor that also misses some member of D.  Both the prose form and
    the set-containment form are evaluated and must agree.
    """
    if D == 0:
        raise ValueError("D must be nonempty")
    if D >> G.n:
        raise ValueError("D has vertices outside the graph")
    if not is_point_determining(G):
        return False
    joined_to_all = G.full_mask
    for v in iter_bits(D):
        joined_to_all &= G.adj[v]
    for u in iter_bits(joined_to_all & ~D):
        # set form: the complemented neighborhood escapes the common-neighbor set
        escapes = complemented_neighborhood(G, u) & ~joined_to_all != 0
        # prose form: some nonneighbor of u misses at least one member of D
        witness = any(
            any(not (G.adj[d] >> w & 1) for d in iter_bits(D))
            for w in iter_bits(complemented_neighborhood(G, u))
        )
        assert escapes == witness, "complemented interference forms disagree"
        if not escapes:
            return False
    return True


def complemented_complete(G: Graph) -> bool:
    """u -> V \\ N(u) pairwise-intersecting: point-determining and no edge
    whose endpoint neighborhoods cover all of V."""
    if not is_point_determining(G):
        return False
    return all((G.adj[u] | G.adj[v]) != G.full_mask for u, v in G.edges)


REGULAR_RULE = "regular"
DEGREE_SUM_RULE = "degree_sum"
DISTANCE2_RULE = "distance_2"


def complemented_sufficient_rule(G: Graph) -> Optional[str]:
    """Strongest degree-based rule certifying complemented completeness.

    In order of decreasing simplicity: k-regular with n > 2k; every two
    degrees summing below n; degree sums <= n on distance-two pairs and < n
    elsewhere.  Returns None when nothing fires (including non-point-
    determining graphs, where no rule may certify anything).
    """
    if not is_point_determining(G):
        return None
    n = G.n
    k = is_regular(G)
    if k is not None and n > 2 * k:
        return REGULAR_RULE
    degs = [G.degree(v) for v in G.vertices()]
    if all(degs[u] + degs[v] < n for u in range(n) for v in range(u + 1, n)):
        return DEGREE_SUM_RULE
    dist2_ok = True
    for u in range(n):
        du = bfs_distances(G, u)
        for v in range(u + 1, n):
            s = degs[u] + degs[v]
            if du[v] == 2:
                if s > n:
                    dist2_ok = False
            elif s >= n:
                dist2_ok = False
    if dist2_ok:
        return DISTANCE2_RULE
    return None


# ---------------------------------------------------------------------------
# closed neighborhoods

@dataclass(frozen=True)
class SelfCheck:
    ok: bool
    reason: Optional[str]

    def __bool__(self) -> bool:
        return self.ok


def closed_neighborhood_selfcheck(G: Graph) -> SelfCheck:
    """u -> N[u] checked as an interference of every minimal dominating set.

    Unlike the rest of this module the interference graph is G itself: each
    outside vertex u shares itself with any dominator adjacent to it, so the
    check passes whenever the labeling is injective.
    """
    labels = tuple(closed_neighborhood(G, u) for u in G.vertices())
    f = SetLabeling(G.n, labels)
    if not is_valid_labeling(f):
        return SelfCheck(False, "NOT_INJECTIVE")
    ok = is_pattern_interference(G, Pattern.all_minimal_dominating(), f)
    return SelfCheck(ok, None if ok else "ORACLE_FAILED")
