"""Command-line front end.

Subcommands: ``compute`` (parameters over a graph6/edge-list stream),
``verify`` (bound suites over a corpus), ``construct`` (named families to
graph6), ``enumerate`` (free trees to graph6).  Results stream as JSONL or
graph6 lines so the subcommands compose through pipes.

Exit codes: 0 all good, 1 a verified relation was violated, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from collections.abc import Iterator

from .constructions import (
    build_heawood,
    build_matched_multipartite,
    build_prescribed_weight_tree,
)
from .graphs import (
    Graph,
    GraphFormatError,
    generate_family,
    max_degree,
    min_degree,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from .solvers import (
    SignedFunction,
    istdn,
    ktuple_total_domination,
    st2in,
    stdn,
    total_domination,
)
from .trees import MAX_TREE_ORDER, free_trees
from .verification import CHECK_IDS, SuiteSummary, evaluate_check, run_suite

SUITES = {
    "t22": ("t22",),
    "turan": ("turan",),
    "regular": ("regular_identities", "regular_bounds"),
    "cubic": ("cubic",),
    "lemma42": ("lemma42",),
    "t43": ("t43",),
    "all": CHECK_IDS,
}

_PARAM_SOLVERS = {
    "istdn": istdn,
    "stdn": stdn,
    "st2in": st2in,
    "td": total_domination,
}


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigdom",
        description="Exact signed/tuple total domination solvers and bound verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_opts(p: argparse.ArgumentParser, trees: bool) -> None:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--input", metavar="FILE", help="input file (default: stdin)")
        if trees:
            group.add_argument(
                "--trees-up-to",
                type=int,
                metavar="N",
                help=f"use all free trees of order 2..N (N <= {MAX_TREE_ORDER})",
            )
        p.add_argument(
            "--format",
            choices=("graph6", "edgelist"),
            default="graph6",
            help="input format (default graph6, one graph per line)",
        )
        p.add_argument(
            "--jobs",
            type=int,
            default=1,
            metavar="J",
            help="fan graphs across J worker processes",
        )

    p_compute = sub.add_parser("compute", help="compute a parameter per input graph")
    p_compute.add_argument(
        "--param",
        required=True,
        choices=("istdn", "stdn", "st2in", "td", "ktd"),
        help="which parameter to compute",
    )
    p_compute.add_argument("--k", type=int, help="tuple level, required for --param ktd")
    add_input_opts(p_compute, trees=False)
    p_compute.set_defaults(func=_cmd_compute)

    p_verify = sub.add_parser("verify", help="run a verification suite over a corpus")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_verify.add_argument(
        "--r",
        type=int,
        help="clique bound parameter for the turan suite "
        "(default: smallest admissible r per graph)",
    )
    add_input_opts(p_verify, trees=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_construct = sub.add_parser("construct", help="emit a named family as graph6")
    p_construct.add_argument(
        "--family",
        required=True,
        nargs="+",
        metavar=("NAME", "ARG"),
        help="hr r | prop41 k | heawood | complete n | cycle n | path n | "
        "bipartite m n | star n",
    )
    p_construct.add_argument(
        "--describe",
        action="store_true",
        help="follow the graph6 line with a JSON fact line",
    )
    p_construct.set_defaults(func=_cmd_construct)

    p_enum = sub.add_parser("enumerate", help="emit all free trees up to an order")
    p_enum.add_argument("--trees-up-to", type=int, required=True, metavar="N")
    p_enum.set_defaults(func=_cmd_enumerate)

    return parser


# ---------------------------------------------------------------------------
# Input plumbing
# ---------------------------------------------------------------------------


def _iter_input_graphs(args) -> Iterator[tuple[str, Graph]]:
    """Yield (location, graph) pairs from --input/stdin or --trees-up-to."""
    trees_up_to = getattr(args, "trees_up_to", None)
    if trees_up_to is not None:
        if not 2 <= trees_up_to <= MAX_TREE_ORDER:
            raise _UsageError(
                f"--trees-up-to must be in 2..{MAX_TREE_ORDER}, got {trees_up_to}"
            )
        for n in range(2, trees_up_to + 1):
            for idx, t in enumerate(free_trees(n)):
                yield f"tree n={n} #{idx}", t
        return
    source = args.input or "<stdin>"
    if args.input:
        with open(args.input, "r", encoding="ascii") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    if args.format == "edgelist":
        yield source, parse_edge_list(text)
        return
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield f"{source}:{lineno}", parse_graph6(line)
        except GraphFormatError as exc:
            raise GraphFormatError(f"{source}:{lineno}: {exc}") from exc


def _witness_payload(witness) -> list[int]:
    if isinstance(witness, SignedFunction):
        return list(witness.values)
    return sorted(witness)


def _compute_record(g: Graph, param: str, k: int | None) -> str:
    if param == "ktd":
        result = ktuple_total_domination(g, k)
    else:
        result = _PARAM_SOLVERS[param](g)
    payload = {"graph_id": write_graph6(g), "param": param}
    if param == "ktd":
        payload["k"] = k
    payload["value"] = result.value
    payload["witness"] = _witness_payload(result.witness)
    return json.dumps(payload)


def _compute_worker(job: tuple[str, str, int | None]) -> str:
    g6, param, k = job
    return _compute_record(parse_graph6(g6), param, k)


def _cmd_compute(args) -> int:
    if args.param == "ktd" and args.k is None:
        raise _UsageError("--param ktd requires --k")
    if args.param != "ktd" and args.k is not None:
        raise _UsageError("--k is only meaningful with --param ktd")
    if args.jobs < 1:
        raise _UsageError("--jobs must be >= 1")
    if args.jobs == 1:
        for where, g in _iter_input_graphs(args):
            try:
                print(_compute_record(g, args.param, args.k))
            except ValueError as exc:
                raise _UsageError(f"{where}: {exc}") from exc
        return 0
    jobs = [(write_graph6(g), args.param, args.k) for _, g in _iter_input_graphs(args)]
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        for line in pool.map(_compute_worker, jobs, chunksize=8):
            print(line)
    return 0


def _verify_worker(job: tuple[str, tuple[str, ...], int | None]):
    g6, check_ids, r = job
    g = parse_graph6(g6)
    return [evaluate_check(cid, g, turan_r=r) for cid in check_ids]


def _cmd_verify(args) -> int:
    if args.jobs < 1:
        raise _UsageError("--jobs must be >= 1")
    check_ids = SUITES[args.suite]
    if args.r is not None and args.r < 2:
        raise _UsageError("--r must be >= 2")
    if args.jobs == 1:
        graphs = (g for _, g in _iter_input_graphs(args))
        summary = run_suite(
            graphs,
            check_ids,
            turan_r=args.r,
            on_report=lambda rep: print(rep.json_line()),
        )
    else:
        jobs = [
            (write_graph6(g), check_ids, args.r) for _, g in _iter_input_graphs(args)
        ]
        summary = SuiteSummary()
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for reports in pool.map(_verify_worker, jobs, chunksize=4):
                for report in reports:
                    summary.add(report)
                    print(report.json_line())
    print(summary.json_line())
    return 0 if summary.ok else 1


def _describe_construction(name: str, params: list[int], g: Graph) -> dict:
    info = {
        "family": name,
        "params": params,
        "n": g.n,
        "m": g.m,
        "min_degree": min_degree(g) if g.n else 0,
        "max_degree": max_degree(g) if g.n else 0,
    }
    if name == "hr":
        r = params[0]
        info["expected_istdn"] = r * (r - 1) ** 2 - r * (r - 1)
    elif name == "prop41":
        info["expected_istdn"] = params[0]
    elif name == "complete":
        info["expected_istdn"] = -2 if params[0] % 2 == 0 else -1
    elif name == "cycle":
        info["expected_istdn"] = (0, -1, -2, -1)[params[0] % 4]
    elif name == "bipartite":
        m, n = params
        if m % 2 == 0 and n % 2 == 0:
            info["expected_istdn"] = 0
        elif m % 2 == 1 and n % 2 == 1:
            info["expected_istdn"] = -2
        else:
            info["expected_istdn"] = -1
    return info


def _cmd_construct(args) -> int:
    name = args.family[0]
    try:
        params = [int(tok) for tok in args.family[1:]]
    except ValueError as exc:
        raise _UsageError(f"family parameters must be integers: {exc}") from exc
    try:
        if name == "hr":
            if len(params) != 1:
                raise _UsageError("family hr takes one parameter r")
            g = build_matched_multipartite(params[0]).graph
        elif name == "prop41":
            if len(params) != 1:
                raise _UsageError("family prop41 takes one parameter k")
            g = build_prescribed_weight_tree(params[0])
        elif name == "heawood":
            if params:
                raise _UsageError("family heawood takes no parameters")
            g = build_heawood()
        elif name in ("complete", "cycle", "path", "star", "bipartite"):
            g = generate_family(name, *params)
        else:
            raise _UsageError(f"unknown family {name!r}")
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    print(write_graph6(g))
    if args.describe:
        print(json.dumps(_describe_construction(name, params, g)))
    return 0


def _cmd_enumerate(args) -> int:
    n_max = args.trees_up_to
    if not 2 <= n_max <= MAX_TREE_ORDER:
        raise _UsageError(f"--trees-up-to must be in 2..{MAX_TREE_ORDER}, got {n_max}")
    for n in range(2, n_max + 1):
        for t in free_trees(n):
            print(write_graph6(t))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"sigdom: error: {exc}", file=sys.stderr)
        return 2
    except GraphFormatError as exc:
        print(f"sigdom: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
