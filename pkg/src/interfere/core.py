"""Set-valued labelings and the interference predicates.

A labeling assigns every vertex a nonempty subset of a ground set
{0..m-1}; distinct vertices must get distinct subsets.  Such a labeling f
is an *interference* of a nonempty vertex set D (with respect to the
"interference graph" I) when every vertex u outside D has some neighbor
v in D whose label meets f(u).  It is an interference of a *family* of
sets when it is one for every member.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .bitset import bit_list, iter_bits, mask_of
from .errors import GraphFormatError
from .domination import all_dominating_sets, minimal_dominating_sets
from .graphs import Graph


@dataclass(frozen=True)
class SetLabeling:
    """Vertex labels over ground set {0..ground_size-1}, one bitmask each."""

    ground_size: int
    labels: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n(self) -> int:
        return len(self.labels)

    def label(self, v: int) -> int:
        return self.labels[v]

    def label_union(self, vertex_mask: int) -> int:
        out = 0
        for v in iter_bits(vertex_mask):
            out |= self.labels[v]
        return out

    def as_sets(self) -> List[List[int]]:
        return [bit_list(lab) for lab in self.labels]

    def to_json_dict(self) -> dict:
        return {"ground_set_size": self.ground_size, "labels": self.as_sets()}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "SetLabeling":
        try:
            m = obj["ground_set_size"]
            raw = obj["labels"]
        except (KeyError, TypeError):
            raise GraphFormatError("labeling JSON needs ground_set_size and labels") from None
        if not isinstance(m, int) or m < 1:
            raise GraphFormatError("ground_set_size must be a positive int")
        labels = []
        for lab in raw:
            if not all(isinstance(e, int) and 0 <= e < m for e in lab):
                raise GraphFormatError(f"label {lab!r} has elements outside 0..{m - 1}")
            labels.append(mask_of(lab))
        return cls(m, tuple(labels))


def is_valid_labeling(f: SetLabeling) -> bool:
    """Nonempty, in-range, pairwise-distinct labels over a nonempty ground set."""
    if f.ground_size < 1 or f.n < 1:
        return False
    limit = 1 << f.ground_size
    if any(lab == 0 or lab >= limit for lab in f.labels):
        return False
    return len(set(f.labels)) == f.n


def _require_valid(f: SetLabeling) -> None:
    if not is_valid_labeling(f):
        raise ValueError("labeling is not valid (empty, out-of-range or repeated labels)")


@dataclass(frozen=True)
class Violation:
    """Why a labeling fails to interfere for D: the vertex and its D-neighbors."""

    vertex: int
    candidates_mask: int

    def as_dict(self) -> dict:
        return {"vertex": self.vertex, "candidates": bit_list(self.candidates_mask)}


def interference_violation(G: Graph, D: int, f: SetLabeling) -> Optional[Violation]:
    """First vertex (ascending) violating the interference condition, or None."""
    if D == 0:
        raise ValueError("D must be nonempty")
    if D >> G.n:
        raise ValueError("D has vertices outside the graph")
    _require_valid(f)
    if f.n != G.n:
        raise ValueError("labeling size does not match graph order")
    for u in G.vertices():
        if D >> u & 1:
            continue
        cands = G.adj[u] & D
        if f.labels[u] & f.label_union(cands) == 0:
            return Violation(u, cands)
    return None


def is_interference(G: Graph, D: int, f: SetLabeling) -> bool:
    return interference_violation(G, D, f) is None


# ---------------------------------------------------------------------------
# pattern families

@dataclass(frozen=True)
class Pattern:
    """A family of target sets, explicit or symbolic."""

    kind: str
    sets: Tuple[int, ...] = ()
    parts: Tuple[int, int] = (0, 0)

    EXPLICIT = "explicit"
    SINGLETONS = "singletons"
    ALL_DOMINATING = "all_dominating"
    ALL_MINIMAL_DOMINATING = "all_minimal_dominating"
    CROSS_PAIRS = "cross_pairs"

    @classmethod
    def explicit(cls, sets: Sequence[int]) -> "Pattern":
        sets = tuple(sets)
        if any(D == 0 for D in sets):
            raise ValueError("explicit pattern members must be nonempty")
        return cls(cls.EXPLICIT, sets=sets)

    @classmethod
    def singletons(cls) -> "Pattern":
        return cls(cls.SINGLETONS)

    @classmethod
    def all_dominating(cls) -> "Pattern":
        return cls(cls.ALL_DOMINATING)

    @classmethod
    def all_minimal_dominating(cls) -> "Pattern":
        return cls(cls.ALL_MINIMAL_DOMINATING)

    @classmethod
    def cross_pairs(cls, side_u: int, side_w: int) -> "Pattern":
        if side_u == 0 or side_w == 0 or (side_u & side_w):
            raise ValueError("cross_pairs needs two disjoint nonempty sides")
        return cls(cls.CROSS_PAIRS, parts=(side_u, side_w))


def expand_pattern(G: Graph, P: Pattern, reduce_dominating: bool = True) -> Tuple[int, ...]:
    """Materialize the family for graph G.

    ALL_DOMINATING reduces to the minimal dominating sets by default: an
    interference of every minimal dominating set is an interference of every
    dominating superset as well (the reduction is itself under test, so the
    unreduced expansion stays available).
    """
    if P.kind == Pattern.EXPLICIT:
        if any(D >> G.n for D in P.sets):
            raise ValueError("explicit pattern has vertices outside the graph")
        return P.sets
    if P.kind == Pattern.SINGLETONS:
        return tuple(1 << v for v in G.vertices())
    if P.kind == Pattern.ALL_MINIMAL_DOMINATING:
        return minimal_dominating_sets(G).sets
    if P.kind == Pattern.ALL_DOMINATING:
        if reduce_dominating:
            return minimal_dominating_sets(G).sets
        return all_dominating_sets(G)
    if P.kind == Pattern.CROSS_PAIRS:
        side_u, side_w = P.parts
        if (side_u | side_w) >> G.n:
            raise ValueError("cross_pairs sides have vertices outside the graph")
        return tuple(
            (1 << u) | (1 << w) for u in iter_bits(side_u) for w in iter_bits(side_w)
        )
    raise ValueError(f"unknown pattern kind {P.kind!r}")


def is_pattern_interference(G: Graph, P: Pattern, f: SetLabeling) -> bool:
    """Interference of every member of the family."""
    return all(is_interference(G, D, f) for D in expand_pattern(G, P))


# ---------------------------------------------------------------------------
# complete interference

def is_complete_interference(f: SetLabeling) -> bool:
    """Valid labeling with pairwise-intersecting labels.

    Equivalent to being an interference of every dominating set when the
    interference graph is complete.
    """
    _require_valid(f)
    labs = f.labels
    return all(
        labs[i] & labs[j] for i in range(len(labs)) for j in range(i + 1, len(labs))
    )


def build_complete_interference(n: int) -> SetLabeling:
    """Deterministic complete interference for n vertices on 1 + ceil(log2 n) elements.

    Every label contains element 0; the rest of label i is the binary
    encoding of i shifted past element 0.  For n=4: {0}, {0,1}, {0,2}, {0,1,2}.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    m = 1 + (n - 1).bit_length()
    return SetLabeling(m, tuple(1 | (i << 1) for i in range(n)))


def random_labeling(n: int, m: int, rng: random.Random) -> SetLabeling:
    """Uniformly chosen valid labeling: n distinct nonempty subsets of {0..m-1}."""
    if (1 << m) - 1 < n:
        raise ValueError(f"cannot pick {n} distinct nonempty labels from {m} elements")
    codes = rng.sample(range(1, 1 << m), n)
    return SetLabeling(m, tuple(codes))
