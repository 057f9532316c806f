"""Command-line interface.

Subcommands wrap the library operations one to one and print JSON
reports (or graph text for the commands that emit graphs).  Exit codes:
0 success, 1 operation error or "valid digraph but not minimal", 2
unreadable or malformed input file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import MsdReport, check_msd
from .bounds import BoundReport, full_bound_report
from .digraph import ConsistencyError, Digraph, GraphError
from .formats import FormatError, format_graph, graph_record, parse_graph, to_dot
from .generators import GeneratorConfig, directed_cycle, enumerate_msds, random_msd
from .longest_cycle import SearchResult, longest_cycle_search
from .spectral import charpoly_cycle_covers
from .transforms import REDUCE_POLICIES, reduce_to_cycle, subdivide

DEFAULT_CYCLE_BUDGET = 10 ** 6


def _load(path: str) -> Digraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def _graph_section(d: Digraph) -> dict:
    return {"n": d.n, "m": d.m}


def _msd_section(rep: MsdReport) -> dict:
    return {
        "is_msd": rep.is_msd,
        "transitive_arcs": [list(a) for a in rep.transitive_arcs],
        "lambda": rep.linear_count,
        "chains": [list(ch.vertices) for ch in rep.chains],
        "external_chains": [list(ch.vertices) for ch in rep.external_chains],
    }


def _bounds_section(rep: BoundReport) -> dict:
    return {
        "n": rep.n,
        "m": rep.m,
        "lambda": rep.linear_count,
        "max_degree": rep.max_degree,
        "upper_bound_longest_cycle": rep.upper_bound_longest_cycle,
        "partial": rep.partial,
        "cycles": [
            {
                "vertices": list(c.vertices),
                "q": c.q,
                "nu": c.nu,
                "mu": c.mu,
                "indegree": c.indegree,
                "outdegree": c.outdegree,
                "vertex_degrees": list(c.vertex_degrees),
            }
            for c in rep.cycles
        ],
        "violations": list(rep.violations),
    }


def _search_section(res: SearchResult) -> dict:
    return {
        "length": res.length,
        "vertices": list(res.cycle.vertices) if res.cycle else [],
        "nodes_explored": res.nodes_explored,
        "early_exit": res.early_exit,
    }


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2))


def cmd_check(args: argparse.Namespace) -> int:
    d = _load(args.path)
    rep = check_msd(d)
    _emit({"graph": _graph_section(d), "msd": _msd_section(rep)})
    return 0 if rep.is_msd else 1


def cmd_bounds(args: argparse.Namespace) -> int:
    d = _load(args.path)
    budget = args.cycle_budget
    if budget is None:
        budget = int(os.environ.get("MSD_CYCLE_BUDGET", DEFAULT_CYCLE_BUDGET))
    rep = full_bound_report(d, cycle_budget=budget)
    _emit({"graph": _graph_section(d), "bounds": _bounds_section(rep)})
    return 0


def cmd_charpoly(args: argparse.Namespace) -> int:
    d = _load(args.path)
    _emit({"graph": _graph_section(d), "charpoly": list(charpoly_cycle_covers(d).coeffs)})
    return 0


def cmd_longest(args: argparse.Namespace) -> int:
    d = _load(args.path)
    res = longest_cycle_search(d, prune=not args.no_prune)
    _emit({"graph": _graph_section(d), "longest_cycle": _search_section(res)})
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    d = _load(args.path)
    avoid = [int(x) for x in args.avoid.split(",") if x != ""] if args.avoid else []
    res = reduce_to_cycle(d, policy=args.policy, avoid=avoid, seed=args.seed)
    _emit({
        "graph": _graph_section(d),
        "reduce": {
            "policy": args.policy,
            "final_cycle": list(res.final.vertices),
            "length": res.final.length,
            "removed": [list(ch) for ch in res.removed],
        },
    })
    return 0


def cmd_subdivide(args: argparse.Namespace) -> int:
    d = _load(args.path)
    print(format_graph(subdivide(d).result), end="")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.enumerate is not None:
        for g in enumerate_msds(args.enumerate):
            print(graph_record(g))
        return 0
    if args.n is None:
        raise GraphError("generate needs --n (random) or --enumerate (exhaustive)")
    if args.cycle:
        print(format_graph(directed_cycle(args.n)), end="")
        return 0
    cfg = GeneratorConfig(seed=args.seed, target_order=args.n, max_attempts=args.max_attempts)
    print(format_graph(random_msd(cfg)), end="")
    return 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    d = _load(args.path)
    print(to_dot(d), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msdkit",
        description="Minimal strong digraph toolkit: check, bound, transform and search.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a digraph; exit 0 only for minimal strong digraphs")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="evaluate all linear-vertex bounds over enumerated cycles")
    p.add_argument("path")
    p.add_argument("--cycle-budget", type=int, default=None,
                   help="max cycles to enumerate (default: MSD_CYCLE_BUDGET or 1000000)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("charpoly", help="characteristic polynomial coefficients k1..kn")
    p.add_argument("path")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("longest", help="exact longest simple cycle")
    p.add_argument("path")
    p.add_argument("--no-prune", action="store_true", help="disable branch-and-bound pruning")
    p.set_defaults(func=cmd_longest)

    p = sub.add_parser("reduce", help="strip external chains down to a single cycle")
    p.add_argument("path")
    p.add_argument("--policy", choices=REDUCE_POLICIES, default="lowest-id")
    p.add_argument("--avoid", default="", help="comma-separated vertices the avoid-set policy spares")
    p.add_argument("--seed", type=int, default=0, help="seed for the random policy")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("subdivide", help="insert a vertex on every arc (emits graph text)")
    p.add_argument("path")
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("generate", help="emit graphs: seeded random MSD, a cycle, or the full small-order corpus")
    p.add_argument("--n", type=int, default=None, help="target order for random generation")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("--cycle", action="store_true", help="emit the directed cycle of order --n")
    p.add_argument("--enumerate", type=int, default=None, metavar="N",
                   help="stream every labeled MSD of order N (N <= 5), one record per line")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("export-dot", help="DOT text for visualization tools")
    p.add_argument("path")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        _emit({"error": {"type": "FormatError", "message": str(exc)}})
        return 2
    except (GraphError, ConsistencyError) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 1


if __name__ == "__main__":
    sys.exit(main())
