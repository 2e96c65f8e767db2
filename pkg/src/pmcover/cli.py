"""Command-line interface.

Graph arguments accept a generator spec (``petersen``, ``flower:5``,
``random:14:7``), a path to a graph6 file (first line is used), or a raw
graph6 literal.  Exit codes: 0 success, 1 check failure, 2 usage error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .compositions import k4_composition, tau5odd_example, three_cut_join, two_cut_join
from .coverings import (
    analyze_graph,
    covering_number,
    fulkerson_covering,
    odd_covering_number,
)
from .errors import GraphError, CatalogError, CoveringError
from .generators import (
    flower_snark,
    generalized_blanusa,
    goldberg_graph,
    named_graph,
    permutation_graph,
    random_bridgeless_cubic,
)
from .graph6 import parse_graph6, to_graph6
from .matchings import enumerate_perfect_matchings, matching_line
from .scan import run_scan
from .verify import run_all


def _generate(spec: str, seed: int | None = None):
    name, _, rest = spec.partition(":")
    args = [p for p in rest.split(":") if p] if rest else []

    def param(i: int) -> str:
        if i >= len(args):
            raise GraphError(f"generator {name!r} needs more parameters")
        return args[i]

    if name in ("petersen", "k4", "k33", "theta", "blanusa1", "blanusa2"):
        return named_graph(name)
    if name == "prism":
        return named_graph("prism", int(param(0)))
    if name == "flower":
        return flower_snark(int(param(0)))
    if name == "goldberg":
        return goldberg_graph(int(param(0)))
    if name == "gblanusa":
        return generalized_blanusa(int(param(0)), int(param(1)))
    if name == "perm":
        sigma = [int(x) for x in param(0).split(",")]
        return permutation_graph(sigma)
    if name == "random":
        n = int(param(0))
        chosen = int(args[1]) if len(args) > 1 else (seed if seed is not None else 0)
        return random_bridgeless_cubic(n, chosen)
    if name == "tau5odd":
        return tau5odd_example()
    raise GraphError(f"unknown generator spec {spec!r}")


def _resolve(spec: str, seed: int | None = None):
    path = Path(spec)
    if path.exists() and path.is_file():
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    return parse_graph6(line)
        raise GraphError(f"no graph6 line in {spec}")
    try:
        return _generate(spec, seed)
    except (GraphError, ValueError, IndexError):
        pass
    return parse_graph6(spec)


def _emit(g, as_g6: bool) -> None:
    if as_g6:
        print(to_graph6(g))
    else:
        pairs = " ".join(f"{u}-{v}" for u, v in g.edges)
        print(f"n={g.n} m={g.m}")
        print(pairs)


def _cmd_gen(args) -> int:
    spec = ":".join([args.name] + args.params)
    g = _generate(spec, args.seed)
    _emit(g, args.g6)
    return 0


def _cmd_analyze(args) -> int:
    g = _resolve(args.graph, args.seed)
    metrics, status = analyze_graph(
        g, cap=args.cap, odd_cap=args.odd_cap, max_matchings=args.max_pm
    )
    if args.json:
        print(json.dumps({"status": status, "metrics": metrics}))
    else:
        print(f"status: {status}")
        for key, value in metrics.items():
            print(f"{key}: {value}")
    return 0


def _cmd_tau(args) -> int:
    g = _resolve(args.graph, args.seed)
    catalog = enumerate_perfect_matchings(g, args.max_pm)
    result = covering_number(g, catalog, cap=args.cap)
    witness = list(result.witness.members) if result.witness else None
    if args.json:
        print(
            json.dumps(
                {"status": result.status, "tau": result.tau, "witness": witness}
            )
        )
    elif result.status == "ok":
        print(f"tau = {result.tau}  witness: {witness}")
    else:
        print(f"tau: {result.status} (cap {result.cap})")
    return 0


def _cmd_tau_odd(args) -> int:
    g = _resolve(args.graph, args.seed)
    catalog = enumerate_perfect_matchings(g, args.max_pm)
    result = odd_covering_number(g, catalog, cap=args.odd_cap)
    witness = list(result.witness.members) if result.witness else None
    if args.json:
        print(
            json.dumps(
                {
                    "status": result.status,
                    "tau_odd": result.size,
                    "count_minimum": result.count_minimum,
                    "witness": witness,
                }
            )
        )
    elif result.status == "ok":
        print(
            f"tau_odd = {result.size}  minimum-size coverings: "
            f"{result.count_minimum}  witness: {witness}"
        )
    else:
        print(f"tau_odd: {result.status} (cap {result.cap})")
    return 0


def _cmd_fulkerson(args) -> int:
    g = _resolve(args.graph, args.seed)
    catalog = enumerate_perfect_matchings(g, args.max_pm)
    cov = fulkerson_covering(g, catalog)
    if cov is None:
        print(
            "NO FULKERSON COVERING EXISTS for this graph - "
            "a counterexample to the double-cover conjecture; please re-check."
        )
        return 1
    if args.json:
        print(json.dumps({"members": list(cov.members)}))
    else:
        print(f"Fulkerson covering members: {list(cov.members)}")
        for pm in cov.matchings:
            print(matching_line(g, pm))
    return 0


def _cmd_enumerate(args) -> int:
    g = _resolve(args.graph, args.seed)
    catalog = enumerate_perfect_matchings(g, args.max_pm)
    if args.json:
        print(
            json.dumps(
                {
                    "count": catalog.count,
                    "matchings": [matching_line(g, pm) for pm in catalog.matchings],
                }
            )
        )
    else:
        for pm in catalog.matchings:
            print(matching_line(g, pm))
    return 0


def _cmd_compose(args) -> int:
    seed = args.seed
    if args.operator == "two-cut":
        g = two_cut_join(
            _resolve(args.specs[0], seed), int(args.specs[1]),
            _resolve(args.specs[2], seed), int(args.specs[3]),
        )
    elif args.operator == "three-cut":
        g = three_cut_join(
            _resolve(args.specs[0], seed), int(args.specs[1]),
            _resolve(args.specs[2], seed), int(args.specs[3]),
        )
    else:
        if len(args.specs) != 8:
            raise GraphError("k4 composition needs four graph/vertex pairs")
        blocks = [
            (_resolve(args.specs[2 * i], seed), int(args.specs[2 * i + 1]))
            for i in range(4)
        ]
        g = k4_composition(blocks)
    _emit(g, args.g6)
    return 0


def _cmd_scan(args) -> int:
    summary = run_scan(
        args.input,
        args.output,
        cap=args.cap,
        odd_cap=args.odd_cap,
        timeout_s=args.timeout_s,
        jobs=args.jobs,
        max_matchings=args.max_pm,
    )
    print(summary.render())
    return 0


def _cmd_verify_paper(args) -> int:
    results = run_all()
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def _add_graph_arg(sub) -> None:
    sub.add_argument("graph", help="generator spec, graph6 file, or graph6 literal")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmcover",
        description="Exact perfect-matching covering computations "
        "for bridgeless cubic graphs",
    )
    parser.add_argument("--seed", type=int, default=None, help="seed for random specs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named or family graph")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--g6", action="store_true", help="emit graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("analyze", help="full covering report for one graph")
    _add_graph_arg(p)
    p.add_argument("--cap", type=int, default=6)
    p.add_argument("--odd-cap", type=int, default=7)
    p.add_argument("--max-pm", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("tau", help="perfect matching index")
    _add_graph_arg(p)
    p.add_argument("--cap", type=int, default=6)
    p.add_argument("--max-pm", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("tau-odd", help="minimum odd covering size")
    _add_graph_arg(p)
    p.add_argument("--odd-cap", type=int, default=7)
    p.add_argument("--max-pm", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tau_odd)

    p = sub.add_parser("fulkerson", help="search for a Fulkerson covering")
    _add_graph_arg(p)
    p.add_argument("--max-pm", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fulkerson)

    p = sub.add_parser("enumerate-pm", help="list all perfect matchings")
    _add_graph_arg(p)
    p.add_argument("--max-pm", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("compose", help="apply a graph composition operator")
    p.add_argument("operator", choices=["two-cut", "three-cut", "k4"])
    p.add_argument("specs", nargs="+", help="alternating graph specs and indices")
    p.add_argument("--g6", action="store_true")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("scan", help="analyze a graph6 corpus into JSONL records")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--cap", type=int, default=6)
    p.add_argument("--odd-cap", type=int, default=7)
    p.add_argument("--timeout-s", type=float, default=60.0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-pm", type=int, default=None)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify-paper", help="run the acceptance suite")
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, CatalogError, CoveringError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
