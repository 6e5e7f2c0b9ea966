"""Command-line front end with machine-readable JSON reports.

Every subcommand prints one JSON document to standard output, except `gen`
(raw graph6 or edge-list text) and `domsets` (a bare JSON array).  Exit
codes: 0 when a verdict was computed (even a negative one), 2 on usage
errors, 3 when a search budget or enumeration cap was exceeded, 4 on
malformed input.  Reports carry "schema": "1" and a "timing" field in
seconds; apart from the timing, output is byte-identical for identical
arguments and seed.

Graph specs accepted by --graph: a family spec such as "wheel:5" or
"husimi:3,4,5" (see families.py), "file:PATH" for the edge-list text
format, or "g6:STRING" for one graph6 line.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

from .bitset import bit_list, iter_bits, mask_of
from .catalog import all_graphs, connected_graphs, connected_graphs_upto
from .core import (
    Pattern,
    SetLabeling,
    build_complete_interference,
    expand_pattern,
    interference_violation,
    is_complete_interference,
    is_interference,
    is_valid_labeling,
)
from .domination import all_dominating_sets, minimal_dominating_sets
from .dpd import distance_pattern, dpd_interference_check, is_dpd_set, path_dpd_set
from .errors import (
    CapExceededError,
    GraphFormatError,
    HypothesisViolation,
    NoDominatingSetError,
    SearchBudgetExceeded,
)
from .families import complete, parse_family_spec
from .graphs import (
    Graph,
    closed_neighborhood,
    components,
    fingerprint,
    from_edge_list,
    from_graph6,
    line_graph,
    to_edge_list_text,
    to_graph6,
)
from .index_search import (
    DEFAULT_BUDGET,
    bipartite_index,
    bipartite_index_upper_bound,
    bipartite_side_index,
    ceil_log2,
    interference_index,
    max_cross_intersecting,
)
from .linegraph import (
    line_complemented_independence_rule,
    line_complemented_interference_of,
    line_complemented_regular_rule,
    line_complemented_size_rule,
    line_complete_report,
    line_injectivity_report,
    line_interference_of,
)
from .neighborhood import (
    closed_neighborhood_selfcheck,
    complemented_complete,
    complemented_interference_of,
    complemented_labeling,
    complemented_sufficient_rule,
    neighborhood_all_but_one,
    neighborhood_complete,
    neighborhood_interference_of,
    neighborhood_labeling,
    neighborhood_singleton,
    two_path_complete,
)

SCHEMA = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_FORMAT = 4

_EXHAUSTIVE_SWEEP_N = 5  # below this, sweeps try every nonempty D


# ---------------------------------------------------------------------------
# input plumbing

def resolve_graph(spec: str) -> Graph:
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {path}: {exc}") from None
        return from_edge_list(text)
    if spec.startswith("g6:"):
        return from_graph6(spec[len("g6:"):])
    return parse_family_spec(spec)


def _load_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path} is not valid JSON: {exc}") from None


def parse_vertex_set(text: str, n: int) -> int:
    try:
        verts = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"vertex set {text!r} must be a comma list of ints") from None
    if not verts:
        raise ValueError("vertex set must be nonempty")
    mask = 0
    for v in verts:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for order {n}")
        mask |= 1 << v
    return mask


def parse_edge_set(tokens: List[str], G: Graph) -> int:
    mask = 0
    for tok in tokens:
        a, sep, b = tok.partition("-")
        if not sep:
            raise ValueError(f"edge token {tok!r} must look like 'u-v'")
        try:
            u, v = int(a), int(b)
        except ValueError:
            raise ValueError(f"edge token {tok!r} has non-integer endpoints") from None
        mask |= 1 << G.edge_index(u, v)
    if mask == 0:
        raise ValueError("edge set must be nonempty")
    return mask


def bipartition(G: Graph) -> Tuple[int, int]:
    """Two-color the graph; raises ValueError when an odd cycle blocks it."""
    side: List[Optional[int]] = [None] * G.n
    for comp in components(G):
        start = (comp & -comp).bit_length() - 1
        side[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for w in iter_bits(G.adj[u]):
                    if side[w] is None:
                        side[w] = side[u] ^ 1
                        nxt.append(w)
                    elif side[w] == side[u]:
                        raise ValueError("cross-pairs needs a bipartite graph")
            frontier = nxt
    U = mask_of(v for v in G.vertices() if side[v] == 0)
    return U, G.full_mask & ~U


def resolve_pattern(name: str, G: Graph) -> Pattern:
    if name == "singletons":
        return Pattern.singletons()
    if name == "min-dominating":
        return Pattern.all_minimal_dominating()
    if name == "all-dominating":
        return Pattern.all_dominating()
    if name == "cross-pairs":
        U, W = bipartition(G)
        return Pattern.cross_pairs(U, W)
    if name.startswith("explicit:"):
        data = _load_json(name[len("explicit:"):])
        if not isinstance(data, list) or not all(
            isinstance(row, list) and all(isinstance(v, int) for v in row) for row in data
        ):
            raise GraphFormatError("explicit pattern file must hold an array of vertex arrays")
        return Pattern.explicit([mask_of(row) for row in data])
    raise ValueError(f"unknown pattern {name!r}")


def resolve_budget(flag_value: Optional[int]) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("INTERFERE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"INTERFERE_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _load_labeling(spec: str, G: Graph) -> SetLabeling:
    if spec == "complete":
        return build_complete_interference(G.n)
    f = SetLabeling.from_json_dict(_load_json(spec))
    if f.n != G.n:
        raise ValueError(f"labeling covers {f.n} vertices but the graph has {G.n}")
    return f


# ---------------------------------------------------------------------------
# subcommand handlers; each returns a report dict, or None if it printed raw

def cmd_gen(args) -> Optional[dict]:
    if args.catalog is not None:
        if args.format != "graph6":
            raise ValueError("--catalog output is graph6 only")
        graphs = connected_graphs(args.catalog) if args.connected else all_graphs(args.catalog)
        for G in graphs:
            print(to_graph6(G))
        return None
    G = parse_family_spec(args.family) if args.family else resolve_graph(args.graph)
    if args.format == "graph6":
        print(to_graph6(G))
    else:
        sys.stdout.write(to_edge_list_text(G))
    return None


def cmd_domsets(args) -> Optional[dict]:
    G = resolve_graph(args.graph)
    if args.kind == "minimal":
        sets = minimal_dominating_sets(G).sets
    else:
        sets = all_dominating_sets(G)
    print(json.dumps([bit_list(D) for D in sets]))
    return None


def cmd_check(args) -> dict:
    G = resolve_graph(args.graph)
    f = _load_labeling(args.labeling, G)
    report = {
        "command": "check",
        "graph": fingerprint(G),
        "labeling_valid": is_valid_labeling(f),
    }
    if args.set:
        targets = [parse_vertex_set(text, G.n) for text in args.set]
    else:
        targets = list(expand_pattern(G, resolve_pattern(args.pattern, G)))
    report["sets_checked"] = len(targets)
    if not report["labeling_valid"]:
        report.update({"verdict": False, "violations": []})
        return report
    violations = []
    for D in targets:
        bad = interference_violation(G, D, f)
        if bad is not None:
            violations.append({"set": bit_list(D), **bad.as_dict()})
    report["verdict"] = not violations
    report["violations"] = violations
    return report


def cmd_index(args) -> dict:
    G = resolve_graph(args.graph)
    P = resolve_pattern(args.pattern, G)
    budget = resolve_budget(args.budget)
    report = {
        "command": "index",
        "graph": fingerprint(G),
        "pattern": args.pattern,
        "budget": budget,
    }
    try:
        res = interference_index(G, P, budget=budget, max_m=args.max_m)
    except NoDominatingSetError as exc:
        report.update({"defined": False, "reason": str(exc)})
        return report
    report["defined"] = True
    report.update(res.as_dict())
    return report


def cmd_brm(args) -> dict:
    if args.krs:
        if args.r is not None or args.m is not None:
            raise ValueError("--krs excludes --r/--m")
        try:
            r, s = (int(tok) for tok in args.krs.split(","))
        except ValueError:
            raise ValueError("--krs takes 'r,s'") from None
        return {
            "command": "brm",
            "r": r,
            "s": s,
            "index": bipartite_index(r, s),
            "upper_bound": bipartite_index_upper_bound(r, s),
            "side_index": bipartite_side_index(r, s),
        }
    if args.r is None or args.m is None:
        raise ValueError("brm needs --r and --m (or --krs r,s)")
    res = max_cross_intersecting(args.r, args.m)
    return {"command": "brm", **res.as_dict()}


def cmd_nbd(args) -> dict:
    G = resolve_graph(args.graph)
    report = {"command": "nbd", "graph": fingerprint(G), "labeling": args.labeling}
    if args.set is not None:
        mode, target = "set", parse_vertex_set(args.set, G.n)
    elif args.singleton is not None:
        _check_vertex(args.singleton, G.n)
        mode, target = "singleton", 1 << args.singleton
    elif args.allbut is not None:
        _check_vertex(args.allbut, G.n)
        mode, target = "allbut", G.full_mask & ~(1 << args.allbut)
        if target == 0:
            raise ValueError("the all-but-one set is empty on an order-1 graph")
    else:
        mode, target = "complete", None
    report["mode"] = mode
    report["target"] = None if target is None else bit_list(target)

    if args.labeling == "open":
        rep = neighborhood_labeling(G)
        trace = {"injective": rep.injective, "has_empty_label": rep.has_empty_label}
        if mode == "complete":
            verdict = neighborhood_complete(G)
            trace["two_path_complete"] = two_path_complete(G)
            rule = "open_complete"
        elif mode == "singleton":
            verdict = neighborhood_singleton(G, args.singleton)
            rule = "open_singleton"
        elif mode == "allbut":
            verdict = neighborhood_all_but_one(G, args.allbut)
            rule = "open_allbut"
        else:
            verdict = neighborhood_interference_of(G, target)
            rule = "open_set"
    elif args.labeling == "complemented":
        rep = complemented_labeling(G)
        trace = {"injective": rep.injective, "has_empty_label": rep.has_empty_label}
        if mode == "complete":
            verdict = complemented_complete(G)
            trace["sufficient_rule"] = complemented_sufficient_rule(G)
            rule = "complemented_complete"
        else:
            verdict = complemented_interference_of(G, target)
            rule = "complemented_set"
    else:  # closed
        labels = tuple(closed_neighborhood(G, u) for u in G.vertices())
        f = SetLabeling(G.n, labels)
        valid = is_valid_labeling(f)
        trace = {"injective": valid, "has_empty_label": False}
        if mode == "complete":
            sc = closed_neighborhood_selfcheck(G)
            verdict = sc.ok
            trace["reason"] = sc.reason
            rule = "closed_universal_selfcheck"
        else:
            verdict = valid and is_interference(G, target, f)
            rule = "closed_set"
    report.update({"verdict": verdict, "rule": rule, "trace": trace})
    return report


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for order {n}")


def cmd_linegraph(args) -> dict:
    G = resolve_graph(args.graph)
    if not G.edges:
        raise ValueError("edge labelings of an edgeless graph are undefined")
    report = {"command": "linegraph", "graph": fingerprint(G), "check": args.check}
    D = parse_edge_set(args.edge_set, G) if args.edge_set else None
    if D is not None:
        report["edge_set"] = [list(G.edges[i]) for i in iter_bits(D)]
    L, _ = line_graph(G)

    if args.check == "injective":
        rep = line_injectivity_report(G)
        oracle = neighborhood_labeling(L).injective
        report.update(
            {
                "verdict": rep.injective,
                "obstructions": [[kind, list(verts)] for kind, verts in rep.obstructions],
                "oracle_agrees": rep.injective == oracle,
            }
        )
    elif args.check == "interference":
        if D is None:
            raise ValueError("--check interference needs --edge-set")
        verdict = line_interference_of(G, D)
        nrep = neighborhood_labeling(L)
        oracle = nrep.valid and is_interference(complete(L.n), D, nrep.labeling)
        report.update({"verdict": verdict, "oracle_agrees": verdict == oracle})
    elif args.check == "complete":
        rep = line_complete_report(G)
        report.update(
            {
                "verdict": rep.verdict,
                "clauses": rep.clauses,
                "undetermined": rep.undetermined,
                "oracle_agrees": True,
            }
        )
    elif args.check == "cnbd":
        if D is None:
            raise ValueError("--check cnbd needs --edge-set")
        verdict = line_complemented_interference_of(G, D)
        crep = complemented_labeling(L)
        oracle = crep.valid and is_interference(complete(L.n), D, crep.labeling)
        report.update({"verdict": verdict, "oracle_agrees": verdict == oracle})
    else:  # rules
        independence = line_complemented_independence_rule(G)
        regular = line_complemented_regular_rule(G)
        size = line_complemented_size_rule(G, D) if D is not None else None
        rule = "independence" if independence else "regular" if regular else None
        report.update(
            {
                "verdict": independence or regular,
                "rule": rule,
                "rules": {"independence": independence, "regular": regular, "size": size},
            }
        )
    return report


def cmd_dpd(args) -> dict:
    G = resolve_graph(args.graph)
    M = path_dpd_set(G.n) if args.path_construction else parse_vertex_set(args.set, G.n)
    pat = distance_pattern(G, M)
    return {
        "command": "dpd",
        "graph": fingerprint(G),
        "markers": bit_list(M),
        "ground_set_size": pat.ground_size,
        "patterns": pat.as_sets(),
        "dpd": is_dpd_set(G, M),
        "interference": dpd_interference_check(G, M),
    }


# ---------------------------------------------------------------------------
# sweeps

def _sweep_corpus(args) -> List[Graph]:
    if args.graphs_file:
        try:
            text = Path(args.graphs_file).read_text()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {args.graphs_file}: {exc}") from None
        return [from_graph6(line) for line in text.splitlines() if line.strip()]
    return connected_graphs_upto(args.max_n)


def _target_sets(G: Graph, seed: int, samples: int) -> List[int]:
    if G.n <= _EXHAUSTIVE_SWEEP_N:
        return list(range(1, 1 << G.n))
    rng = random.Random(f"{seed}:{fingerprint(G)['edge_hash']}")
    return [rng.randrange(1, 1 << G.n) for _ in range(samples)]


def _sweep_nbd(args) -> Tuple[int, int, List[dict]]:
    graphs = _sweep_corpus(args)
    checks = 0
    mismatches = []
    for G in graphs:
        g6 = to_graph6(G)
        Kn = complete(G.n)
        nrep = neighborhood_labeling(G)
        crep = complemented_labeling(G)

        def oracle_open(D: int) -> bool:
            return nrep.valid and is_interference(Kn, D, nrep.labeling)

        def oracle_comp(D: int) -> bool:
            return crep.valid and is_interference(Kn, D, crep.labeling)

        for D, kind, thm, orc in (
            (None, "open_complete", neighborhood_complete(G),
             nrep.valid and is_complete_interference(nrep.labeling)),
            (None, "complemented_complete", complemented_complete(G),
             crep.valid and is_complete_interference(crep.labeling)),
        ):
            checks += 1
            if thm != orc:
                mismatches.append({"graph6": g6, "kind": kind, "set": None})
        for D in _target_sets(G, args.seed, args.samples):
            for kind, thm, orc in (
                ("open_set", neighborhood_interference_of(G, D), oracle_open(D)),
                ("complemented_set", complemented_interference_of(G, D), oracle_comp(D)),
            ):
                checks += 1
                if thm != orc:
                    mismatches.append({"graph6": g6, "kind": kind, "set": bit_list(D)})
    return len(graphs), checks, mismatches


def _sweep_lg(args) -> Tuple[int, int, List[dict]]:
    graphs = [G for G in _sweep_corpus(args) if G.edges]
    checks = 0
    mismatches = []
    for G in graphs:
        L, _ = line_graph(G)
        thm = line_injectivity_report(G).injective
        orc = neighborhood_labeling(L).injective
        checks += 1
        if thm != orc:
            mismatches.append({"graph6": to_graph6(G), "kind": "line_injective", "set": None})
    return len(graphs), checks, mismatches


def _sweep_index_kn(args) -> Tuple[int, int, List[dict]]:
    budget = resolve_budget(None)
    checks = 0
    mismatches = []
    count = 0
    for n in range(2, args.max_n + 1):
        count += 1
        res = interference_index(complete(n), Pattern.all_dominating(), budget=budget)
        expected = ceil_log2(2 * n)
        exhausted = res.index == res.lower_bound_used or any(
            p.m == res.index - 1 and not p.found for p in res.trace
        )
        checks += 1
        if res.index != expected or not exhausted:
            mismatches.append(
                {"graph6": to_graph6(complete(n)), "kind": "index_kn",
                 "set": [res.index, expected]}
            )
    return count, checks, mismatches


_SUITES = {
    "nbd-oracle": _sweep_nbd,
    "lg-injectivity": _sweep_lg,
    "index-kn": _sweep_index_kn,
}


def cmd_sweep(args) -> dict:
    runner = _SUITES[args.suite]
    graph_count, check_count, mismatches = runner(args)
    mismatches.sort(key=lambda m: (m["graph6"], m["kind"], str(m["set"])))
    return {
        "command": "sweep",
        "suite": args.suite,
        "max_n": args.max_n,
        "seed": args.seed,
        "samples": args.samples,
        "graph_count": graph_count,
        "check_count": check_count,
        "mismatch_count": len(mismatches),
        "mismatches": mismatches[:50],
        "ok": not mismatches,
    }


# ---------------------------------------------------------------------------
# parser and dispatch

class _Parser(argparse.ArgumentParser):
    """Argparse that emits the JSON error object usage failures owe stdout."""

    def error(self, message):
        print(json.dumps({"error": {"kind": "usage", "message": message},
                          "schema": SCHEMA}, sort_keys=True))
        print(f"usage error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="interfere", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named graph or a whole catalog level")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", help="family spec such as wheel:5")
    grp.add_argument("--graph", help="any graph spec (family, file:PATH, g6:STRING)")
    grp.add_argument("--catalog", type=int, help="all graphs on exactly this many vertices")
    p.add_argument("--connected", action="store_true", help="restrict --catalog to connected graphs")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("domsets", help="print dominating sets as a JSON array")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=("minimal", "all"), default="minimal")
    p.set_defaults(func=cmd_domsets)

    p = sub.add_parser("check", help="test a labeling against target sets or a pattern")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True,
                   help="labeling JSON file, or 'complete' for the built-in construction")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", action="append", help="comma list of vertices (repeatable)")
    grp.add_argument("--pattern",
                     help="singletons | min-dominating | all-dominating | cross-pairs | explicit:FILE")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("index", help="smallest ground set admitting a pattern interference")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", default="all-dominating",
                   help="singletons | min-dominating | all-dominating | cross-pairs | explicit:FILE")
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--budget", type=int, default=None,
                   help="search node budget (also via INTERFERE_BUDGET)")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("brm", help="extremal cross-intersecting size, or bipartite index")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--krs", default=None, help="'r,s': index of the complete bipartite graph")
    p.set_defaults(func=cmd_brm)

    p = sub.add_parser("nbd", help="neighborhood-labeling interference criteria")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", choices=("open", "complemented", "closed"), default="open")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", help="comma list of vertices")
    grp.add_argument("--complete", action="store_true")
    grp.add_argument("--singleton", type=int, metavar="V")
    grp.add_argument("--allbut", type=int, metavar="V")
    p.set_defaults(func=cmd_nbd)

    p = sub.add_parser("linegraph", help="edge-labeling interference criteria")
    p.add_argument("--graph", required=True)
    p.add_argument("--edge-set", nargs="+", metavar="U-V",
                   help="edges as endpoint pairs, e.g. 0-1 1-2")
    p.add_argument("--check", choices=("injective", "interference", "complete", "cnbd", "rules"),
                   required=True)
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("dpd", help="distance-pattern labelings")
    p.add_argument("--graph", required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", help="comma list of marker vertices")
    grp.add_argument("--path-construction", action="store_true",
                     help="use the built-in marker set for paths of this order")
    p.set_defaults(func=cmd_dpd)

    p = sub.add_parser("sweep", help="oracle-equivalence batches over small-graph catalogs")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500,
                   help="random target sets per graph beyond the exhaustive size")
    p.add_argument("--graphs-file", default=None, help="graph6 lines replacing the catalog")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    start = time.perf_counter()
    try:
        report = args.func(args)
    except GraphFormatError as exc:
        return _fail("format", str(exc), EXIT_FORMAT)
    except (SearchBudgetExceeded, CapExceededError) as exc:
        return _fail("budget", str(exc), EXIT_BUDGET)
    except HypothesisViolation as exc:
        return _fail("hypothesis", str(exc), EXIT_USAGE)
    except ValueError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    if report is not None:
        report["schema"] = SCHEMA
        report["timing"] = round(time.perf_counter() - start, 6)
        print(json.dumps(report, sort_keys=True))
    return EXIT_OK


def _fail(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": {"kind": kind, "message": message}, "schema": SCHEMA},
                     sort_keys=True))
    print(f"error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
