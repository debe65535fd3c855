"""Command-line front end.

JSON goes to stdout (byte-identical across identical invocations),
diagnostics to stderr.  Exit codes: 0 clean, 1 mathematical finding
(witness produced or check failed), 2 operational error (bad usage,
unreadable graph, cap exceeded, budget not below the bound).
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .dyngraph import (
    DEFAULT_MAX_ROUNDS,
    closure,
    load_graph_file,
    min_dominating_set,
    min_rounds,
)
from .errors import (
    AlgorithmRangeError,
    AssignmentImpossible,
    BudgetNotBelowBound,
    CapExceeded,
    GraphFormatError,
    KnowAllError,
    NotDominatedWithinCap,
)
from .kuhn import algorithm_coloring, assign_node, inp, primitive_simplices, vertices
from .oracle import EXHAUSTIVE_CONFIG_CAP, exhaustive_check, sample_check
from .protocol import algorithm_by_name, flood_solve, format_inputs, parse_inputs
from .refuter import refute

TRIANGULATION_CAP = 10 ** 6
SAMPLE_COUNT = 1000


def _emit(payload, pretty: bool) -> None:
    if pretty:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def cmd_bound(args: argparse.Namespace) -> int:
    spec = load_graph_file(args.graph)
    r = min_rounds(spec, args.k, args.max_rounds)
    gammas = [min_dominating_set(closure(spec, i)).size for i in range(1, r + 1)]
    dom = min_dominating_set(closure(spec, r))
    _emit({"r": r, "dominating_set": dom.sorted_members(),
           "gamma_by_round": gammas}, args.pretty)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    spec = load_graph_file(args.graph)
    inputs = parse_inputs(args.inputs, spec.n, args.k)
    r = min_rounds(spec, args.k, args.max_rounds)
    dom = min_dominating_set(closure(spec, r))
    report = flood_solve(spec, args.k, inputs, args.max_rounds)
    _emit({
        "outputs": format_inputs(report.outputs),
        "r": r,
        "dominating_set": dom.sorted_members(),
        "valid": report.valid,
        "agreeing": report.agreeing,
    }, args.pretty)
    return 0


def cmd_refute(args: argparse.Namespace) -> int:
    spec = load_graph_file(args.graph)
    alg = algorithm_by_name(args.alg)
    witness = refute(spec, args.k, alg, args.budget, args.max_rounds)
    _emit(witness.to_dict(), args.pretty)
    return 1


def cmd_closure(args: argparse.Namespace) -> int:
    spec = load_graph_file(args.graph)
    H = closure(spec, args.r)
    if args.dot:
        sys.stdout.write(H.to_dot())
    else:
        _emit({"n": H.n, "r": args.r,
               "arcs": [list(a) for a in sorted(H.arcs)]}, args.pretty)
    return 0


def cmd_triangulate(args: argparse.Namespace) -> int:
    n, k = args.n, args.k
    if math.comb(n + k, k) > TRIANGULATION_CAP or n ** k > TRIANGULATION_CAP:
        raise CapExceeded(
            f"triangulation for n={n}, k={k} exceeds the {TRIANGULATION_CAP}-cell cap")
    if args.budget is not None and args.graph is None:
        raise ValueError("--budget needs --graph")
    if args.alg is not None and args.budget is None:
        raise ValueError("--alg needs --graph and --budget")

    spec = None
    if args.graph is not None:
        spec = load_graph_file(args.graph)
        if spec.n != n:
            raise ValueError(f"--n {n} does not match the graph's n={spec.n}")

    coloring = None
    if args.alg is not None:
        coloring = algorithm_coloring(spec, k, args.budget, algorithm_by_name(args.alg))

    verts = list(vertices(n, k))
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        node = color_value = None
        if spec is not None and args.budget is not None:
            node = assign_node(spec, k, args.budget, v)
        if coloring is not None:
            color_value = coloring(v)
        rows.append({"coords": list(v), "inp": format_inputs(inp(v, n)),
                     "node": node, "color": color_value})
    cells = [{"base": list(s.base), "perm": list(s.perm),
              "vertex_ids": [index[v] for v in s.vertices()]}
             for s in primitive_simplices(n, k)]

    if args.pretty:
        print("# vertices: coords\tinp\tnode\tcolor")
        for row in rows:
            cols = [",".join(str(x) for x in row["coords"]), row["inp"]]
            if row["node"] is not None:
                cols.append(str(row["node"]))
            if row["color"] is not None:
                cols.append(str(row["color"]))
            print("\t".join(cols))
        print("# simplices: vertex ids")
        for cell in cells:
            print(",".join(str(i) for i in cell["vertex_ids"]))
    else:
        _emit({"n": n, "k": k, "vertices": rows, "simplices": cells}, pretty=False)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    spec = load_graph_file(args.graph)
    alg = algorithm_by_name(args.alg)
    if args.exhaustive:
        report = exhaustive_check(spec, args.k, alg, args.budget)
        mode = "exhaustive"
    else:
        report = sample_check(spec, args.k, alg, args.budget,
                              samples=SAMPLE_COUNT, seed=args.seed)
        mode = "sampled"
    first = None
    if report.failures:
        cfg, outcome = report.failures[0]
        first = {"config": format_inputs(cfg),
                 "outputs": list(outcome.outputs),
                 "valid": outcome.valid,
                 "agreeing": outcome.agreeing}
    _emit({"mode": mode, "configs_checked": report.total_configs,
           "failure_count": len(report.failures),
           "first_failure": first, "passed": report.passed}, args.pretty)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knowall",
        description="Round-optimal k-set agreement on known dynamic graphs: "
                    "compute the tight bound, solve at it, refute below it.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true",
                        help="indented JSON (tables for triangulate)")
    common.add_argument("--threads", type=_positive, default=1,
                        help="worker cap; results never depend on it")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common],
                       help="tight round bound and a witnessing dominating set")
    p.add_argument("--graph", required=True, help="graph sequence JSON file")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--max-rounds", type=_positive, default=DEFAULT_MAX_ROUNDS)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("solve", parents=[common],
                       help="run the optimal flooding algorithm on given inputs")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--inputs", required=True, help="digit string, node 1 first")
    p.add_argument("--max-rounds", type=_positive, default=DEFAULT_MAX_ROUNDS)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("refute", parents=[common],
                       help="counterexample against an algorithm run below the bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--alg", required=True, help="builtin algorithm name")
    p.add_argument("--budget", type=_nonnegative, required=True)
    p.add_argument("--max-rounds", type=_positive, default=DEFAULT_MAX_ROUNDS)
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("triangulate", parents=[common],
                       help="vertex and cell tables of the input-space triangulation")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--graph", help="adds the node-assignment column")
    p.add_argument("--budget", type=_nonnegative, help="budget for node assignment")
    p.add_argument("--alg", help="adds the color column")
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("closure", parents=[common],
                       help="information-flow closure H_r of the sequence")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", type=_nonnegative, required=True)
    p.add_argument("--dot", action="store_true", help="DOT text instead of JSON")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("check", parents=[common],
                       help="validity/agreement sweep of an algorithm at a budget")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--alg", required=True)
    p.add_argument("--budget", type=_nonnegative, required=True)
    p.add_argument("--exhaustive", action="store_true",
                   help=f"all (k+1)^n configurations (cap {EXHAUSTIVE_CONFIG_CAP})")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the sampled mode")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, CapExceeded, NotDominatedWithinCap,
            BudgetNotBelowBound, AssignmentImpossible, AlgorithmRangeError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KnowAllError as exc:
        # LemmaFalsified / NoPanchromaticCell: internal inconsistency, be loud
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
