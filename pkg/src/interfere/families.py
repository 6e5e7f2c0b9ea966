"""Named graph families with pinned vertex numbering.

The numbering conventions are part of the public contract (tests and CLI
reports rely on them):

* path/cycle: vertices in walk order 0..n-1
* complete bipartite: first side 0..r-1, second side r..r+s-1
* wheel: rim cycle 0..n-1, hub n
* helm: wheel numbering, pendant of rim vertex i is n+1+i
* crown (cycle corona): cycle 0..n-1, pendant of i is n+i
* star_polygon: cycle 0..n-1, apex of cycle edge (i, i+1 mod n) is n+i
* windmill / husimi: shared cut-vertex 0, blocks numbered consecutively
* matching: edge i joins 2i and 2i+1
"""
from __future__ import annotations

from typing import Sequence

from .errors import GraphFormatError
from .graphs import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise ValueError("complete bipartite needs r, s >= 1")
    return Graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def star(s: int) -> Graph:
    """K_{1,s} with center 0."""
    if s < 1:
        raise ValueError("star needs s >= 1")
    return Graph(s + 1, [(0, i) for i in range(1, s + 1)])


def matching(k: int) -> Graph:
    if k < 1:
        raise ValueError("matching needs k >= 1")
    return Graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def wheel(n: int) -> Graph:
    """Cycle of length n plus a hub adjacent to every rim vertex; order n+1."""
    if n < 3:
        raise ValueError("wheel needs rim length n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    return Graph(n + 1, edges)


def helm(n: int) -> Graph:
    """Wheel of rim length n with one pendant hung on each rim vertex."""
    if n < 3:
        raise ValueError("helm needs rim length n >= 3")
    W = wheel(n)
    edges = list(W.edges) + [(i, n + 1 + i) for i in range(n)]
    return Graph(2 * n + 1, edges)


def crown(n: int) -> Graph:
    """Corona of the cycle: C_n with one pendant on each cycle vertex."""
    if n < 3:
        raise ValueError("crown needs cycle length n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, edges)


def star_polygon(n: int) -> Graph:
    """Each edge of C_n replaced by a triangle through a private apex vertex."""
    if n < 3:
        raise ValueError("star polygon needs cycle length n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges += [(i, n + i), ((i + 1) % n, n + i)]
    return Graph(2 * n, edges)


def windmill(n: int, m: int) -> Graph:
    """m copies of K_n glued at the single cut-vertex 0."""
    if n < 2 or m < 2:
        raise ValueError("windmill needs block order n >= 2 and m >= 2 blocks")
    return husimi([n] * m)


def husimi(orders: Sequence[int]) -> Graph:
    """Complete blocks of the given orders sharing the single cut-vertex 0."""
    if len(orders) < 2:
        raise ValueError("husimi tree needs at least two blocks")
    if any(k < 2 for k in orders):
        raise ValueError("husimi block orders must be >= 2")
    edges = []
    nxt = 1
    for k in orders:
        block = [0] + list(range(nxt, nxt + k - 1))
        nxt += k - 1
        edges += [(block[i], block[j]) for i in range(k) for j in range(i + 1, k)]
    return Graph(nxt, edges)


_FIXED_ARITY = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "kpq": (complete_bipartite, 2),
    "star": (star, 1),
    "matching": (matching, 1),
    "wheel": (wheel, 1),
    "helm": (helm, 1),
    "crown": (crown, 1),
    "star_polygon": (star_polygon, 1),
    "windmill": (windmill, 2),
}


def generate_family(name: str, params: Sequence[int]) -> Graph:
    """Build a named family member; raises GraphFormatError on bad name/params."""
    params = list(params)
    try:
        if name == "husimi":
            return husimi(params)
        if name in _FIXED_ARITY:
            fn, arity = _FIXED_ARITY[name]
            if len(params) != arity:
                raise ValueError(f"{name} takes {arity} parameter(s), got {len(params)}")
            return fn(*params)
    except ValueError as exc:
        raise GraphFormatError(f"family {name}: {exc}") from None
    raise GraphFormatError(f"unknown family {name!r}")


def parse_family_spec(spec: str) -> Graph:
    """Parse 'name:p1,p2,...' family specs, e.g. 'wheel:5' or 'husimi:3,4,5'."""
    name, sep, rest = spec.partition(":")
    name = name.strip()
    if not sep or not rest.strip():
        raise GraphFormatError(f"family spec {spec!r} needs name:params")
    try:
        params = [int(tok) for tok in rest.split(",")]
    except ValueError:
        raise GraphFormatError(f"family spec {spec!r} has non-integer parameters") from None
    return generate_family(name, params)
