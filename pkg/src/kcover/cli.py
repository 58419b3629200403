"""Command-line front end: cover, exact, pack, ratio-study, verify.

Reports are line-oriented key=value text (or JSON with --format structured)
with rationals rendered exactly, e.g. lp_objective=9/2.  Exit codes:
0 certified/feasible, 1 infeasible/uncertified, 2 usage error, 3 resource
cap (enumeration cap or node budget).  Stdout is byte-identical across
repeated runs on the same input; wall time goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cover import (
    CoverResult,
    cover_k_cliques_basic,
    cover_k_cliques_improved,
    cover_k_cycles_basic,
    cover_k_cycles_odd,
)
from .exact import (
    DEFAULT_NODE_BUDGET,
    exact_max_packing,
    exact_min_cover,
)
from .graph import EdgeSet, GraphFormatError, complete_graph, parse_edge_set, parse_graph
from .structures import DEFAULT_MAX_STRUCTURES, EnumerationCapError, verify_cover

EXIT_OK = 0
EXIT_UNCERTIFIED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class RunReport:
    """One cover run: inputs, certified bound data, and timing."""

    input: str
    algorithm: str
    k: int
    kind: str
    cover: EdgeSet
    cover_weight: int
    lp_objective: Fraction
    ratio_bound: Fraction
    certified: bool
    wall_time: float

    def text_lines(self) -> list[str]:
        return [
            f"input={self.input}",
            f"algorithm={self.algorithm}",
            f"k={self.k}",
            f"kind={self.kind}",
            f"cover_weight={self.cover_weight}",
            f"lp_objective={self.lp_objective}",
            f"ratio_bound={self.ratio_bound}",
            f"certified={'true' if self.certified else 'false'}",
            f"cover={_edges_text(self.cover)}",
        ]

    def json_obj(self) -> dict:
        return {
            "input": self.input,
            "algorithm": self.algorithm,
            "k": self.k,
            "kind": self.kind,
            "cover_weight": self.cover_weight,
            "lp_objective": str(self.lp_objective),
            "ratio_bound": str(self.ratio_bound),
            "certified": self.certified,
            "cover": [[u, v] for u, v in self.cover],
        }


def _edges_text(s: EdgeSet) -> str:
    return ",".join(f"{u}-{v}" for u, v in s)


def _emit(args, text_lines: list[str], json_obj: dict) -> None:
    if args.format == "structured":
        sys.stdout.write(json.dumps(json_obj, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def cmd_cover(args) -> int:
    g = parse_graph(_read(args.file))
    dispatch = {
        ("cycle", "basic"): cover_k_cycles_basic,
        ("cycle", "improved"): cover_k_cycles_odd,
        ("clique", "basic"): cover_k_cliques_basic,
        ("clique", "improved"): cover_k_cliques_improved,
    }
    run = dispatch[(args.kind, args.algorithm)]
    start = time.perf_counter()
    result: CoverResult = run(g, args.k, max_structures=args.max_structures)
    elapsed = time.perf_counter() - start
    certified = verify_cover(g, args.k, args.kind, result.cover) and Fraction(
        result.cover_weight
    ) <= result.ratio_bound * result.lp_objective
    report = RunReport(
        input=args.file,
        algorithm=result.algorithm,
        k=args.k,
        kind=args.kind,
        cover=result.cover,
        cover_weight=result.cover_weight,
        lp_objective=result.lp_objective,
        ratio_bound=result.ratio_bound,
        certified=certified,
        wall_time=elapsed,
    )
    _emit(args, report.text_lines(), report.json_obj())
    sys.stderr.write(f"wall_time_seconds={elapsed:.6f}\n")
    return EXIT_OK if certified else EXIT_UNCERTIFIED


def cmd_exact(args) -> int:
    g = parse_graph(_read(args.file))
    result = exact_min_cover(
        g,
        args.k,
        args.kind,
        max_structures=args.max_structures,
        node_budget=args.node_budget,
    )
    head = [f"input={args.file}", f"k={args.k}", f"kind={args.kind}"]
    obj: dict = {"input": args.file, "k": args.k, "kind": args.kind}
    if not result.solved:
        _emit(
            args,
            head + ["status=unsolved", f"nodes={result.node_count}"],
            obj | {"status": "unsolved", "nodes": result.node_count},
        )
        return EXIT_RESOURCE
    assert result.cover is not None
    _emit(
        args,
        head
        + [
            "status=optimal",
            f"weight={result.weight}",
            f"nodes={result.node_count}",
            f"cover={_edges_text(result.cover)}",
        ],
        obj
        | {
            "status": "optimal",
            "weight": result.weight,
            "nodes": result.node_count,
            "cover": [[u, v] for u, v in result.cover],
        },
    )
    return EXIT_OK


def cmd_pack(args) -> int:
    g = parse_graph(_read(args.file))
    result = exact_max_packing(
        g, args.k, max_structures=args.max_structures, node_budget=args.node_budget
    )
    head = [f"input={args.file}", f"k={args.k}"]
    obj: dict = {"input": args.file, "k": args.k}
    if not result.solved:
        _emit(
            args,
            head + ["status=unsolved", f"nodes={result.node_count}"],
            obj | {"status": "unsolved", "nodes": result.node_count},
        )
        return EXIT_RESOURCE
    assert result.cliques is not None
    cliques_text = ",".join(".".join(str(v) for v in s.vertices) for s in result.cliques)
    _emit(
        args,
        head
        + [
            "status=optimal",
            f"count={result.count}",
            f"nodes={result.node_count}",
            f"cliques={cliques_text}",
        ],
        obj
        | {
            "status": "optimal",
            "count": result.count,
            "nodes": result.node_count,
            "cliques": [list(s.vertices) for s in result.cliques],
        },
    )
    return EXIT_OK


def cmd_ratio_study(args) -> int:
    try:
        lo_text, hi_text = args.n_range.split(":")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise ValueError(f"--n-range must be MIN:MAX, got {args.n_range!r}")
    if lo > hi or lo < 1:
        raise ValueError(f"invalid n range {lo}:{hi}")

    lines = []
    rows = []
    any_unsolved = False
    for n in range(lo, hi + 1):
        g = complete_graph(n)
        cover = exact_min_cover(
            g,
            args.k,
            args.kind,
            max_structures=args.max_structures,
            node_budget=args.node_budget,
        )
        packing = exact_max_packing(
            g, args.k, max_structures=args.max_structures, node_budget=args.node_budget
        )
        if not (cover.solved and packing.solved):
            any_unsolved = True
            lines.append(f"n={n} status=unsolved")
            rows.append({"n": n, "status": "unsolved"})
            continue
        tau, nu = cover.weight, packing.count
        assert tau is not None and nu is not None
        over_nu = str(Fraction(tau, nu)) if nu else "-"
        over_binom = str(Fraction(tau, comb(n, 2))) if n >= 2 else "-"
        lines.append(
            f"n={n} tau={tau} nu={nu} tau_over_nu={over_nu} tau_over_binom={over_binom}"
        )
        rows.append(
            {
                "n": n,
                "status": "optimal",
                "tau": tau,
                "nu": nu,
                "tau_over_nu": over_nu,
                "tau_over_binom": over_binom,
            }
        )
    _emit(args, lines, {"k": args.k, "kind": args.kind, "rows": rows})
    return EXIT_RESOURCE if any_unsolved else EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.file))
    _, cover = parse_edge_set(_read(args.cover_file))
    foreign = [e for e in cover if e not in g.edge_set()]
    if foreign:
        listed = ",".join(f"{u}-{v}" for u, v in foreign)
        raise ValueError(f"cover contains edges not in the graph: {listed}")
    feasible = verify_cover(g, args.k, args.kind, cover)
    lines = [
        f"input={args.file}",
        f"cover_file={args.cover_file}",
        f"k={args.k}",
        f"kind={args.kind}",
        f"feasible={'true' if feasible else 'false'}",
    ]
    obj = {
        "input": args.file,
        "cover_file": args.cover_file,
        "k": args.k,
        "kind": args.kind,
        "feasible": feasible,
    }
    _emit(args, lines, obj)
    return EXIT_OK if feasible else EXIT_UNCERTIFIED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-structures",
        type=int,
        default=_env_int("KCOVER_MAX_STRUCTURES", DEFAULT_MAX_STRUCTURES),
        help="enumeration cap; exceeding it aborts with exit code 3",
    )
    common.add_argument(
        "--node-budget",
        type=int,
        default=_env_int("KCOVER_NODE_BUDGET", DEFAULT_NODE_BUDGET),
        help="branch-and-bound node budget for exact solves",
    )
    common.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="report style: key=value lines or a JSON document",
    )

    parser = argparse.ArgumentParser(
        prog="kcover",
        description="Certified approximation and exact solvers for k-cycle "
        "and k-clique covering of weighted graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cover = sub.add_parser("cover", parents=[common], help="approximate cover")
    p_cover.add_argument("file", help="edge-list graph file")
    p_cover.add_argument("--k", type=int, required=True)
    p_cover.add_argument("--kind", choices=("cycle", "clique"), required=True)
    p_cover.add_argument("--algorithm", choices=("basic", "improved"), default="basic")
    p_cover.set_defaults(func=cmd_cover)

    p_exact = sub.add_parser("exact", parents=[common], help="exact minimum cover")
    p_exact.add_argument("file")
    p_exact.add_argument("--k", type=int, required=True)
    p_exact.add_argument("--kind", choices=("cycle", "clique"), required=True)
    p_exact.set_defaults(func=cmd_exact)

    p_pack = sub.add_parser("pack", parents=[common], help="exact maximum clique packing")
    p_pack.add_argument("file")
    p_pack.add_argument("--k", type=int, required=True)
    p_pack.set_defaults(func=cmd_pack)

    p_ratio = sub.add_parser(
        "ratio-study",
        parents=[common],
        help="exact covering/packing ratio table on complete graphs",
    )
    p_ratio.add_argument("--k", type=int, required=True)
    p_ratio.add_argument("--kind", choices=("cycle", "clique"), required=True)
    p_ratio.add_argument("--n-range", required=True, help="inclusive MIN:MAX")
    p_ratio.set_defaults(func=cmd_ratio_study)

    p_verify = sub.add_parser("verify", parents=[common], help="check a cover file")
    p_verify.add_argument("file")
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.add_argument("--kind", choices=("cycle", "clique"), required=True)
    p_verify.add_argument("--cover-file", required=True)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except (GraphFormatError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
