"""Command-line interface.

Subcommands::

    solve      maximum colored cut (exact via kernel or brute force, or greedy)
    colorful   decide whether some cut crosses every color
    kernelize  apply the dense-color removal rule, print the reduced graph
    generate   build a hardness instance from a 3-CNF formula
    verify     structural checks for generated graphs (and cut checks)
    stats      per-color edge counts, distinct endpoint pairs, span

Exit codes: 0 yes / success, 1 no, 2 bad input, 3 refused exhaustive search.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import CapExceededError, FormatError
from .graph import (
    ColoredGraph,
    color_span,
    cut_colors,
    distinct_pairs_of_color,
    is_colorful,
    parse_cut,
    parse_graph,
    serialize_cut,
    serialize_graph,
)
from .kernel import KernelVerdict, kernelize_colors, kernelize_value
from .reductions import (
    ReductionArtifact,
    ReductionKind,
    embed_complete_artifact,
    make_k4mf_connected,
    make_oct_one,
    multigraph_to_simple,
    nae_to_cliques,
    parse_provenance,
    sat_to_multigraph,
    serialize_provenance,
    verify_structural,
)
from .sat import parse_dimacs
from .solve import (
    BRUTE_FORCE_CAP,
    brute_force_max,
    colorful_cut_decide,
    greedy_half_colors,
    solve_via_kernel,
)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    if args.algo == "brute":
        witness = brute_force_max(g, cap=args.cap).witness
    elif args.algo == "kernel":
        witness = solve_via_kernel(g, cap=args.cap).witness
    else:
        witness = greedy_half_colors(g)
    value = len(cut_colors(g, witness))
    print(f"value {value}")
    _emit(serialize_cut(witness), args.output)
    if args.k is not None:
        return 0 if value >= args.k else 1
    return 0


def _cmd_colorful(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    if args.algo == "sat":
        cut = colorful_cut_decide(g)
    else:
        if g.n < 2:
            cut = None
        else:
            best = brute_force_max(g, cap=args.cap)
            cut = best.witness if best.value == g.p else None
    if cut is None:
        print("colorful no")
        return 1
    print("colorful yes")
    _emit(serialize_cut(cut), args.output)
    return 0


def _cmd_kernelize(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    if args.param == "colors":
        outcome = kernelize_colors(g)
        print(f"removed {len(outcome.removed_colors)} colors, p' {outcome.reduced_graph.p}")
        _emit(serialize_graph(outcome.reduced_graph), args.output)
        return 0
    if args.k is None:
        raise ValueError("--param k requires -k")
    outcome = kernelize_value(g, args.k)
    if outcome.verdict is KernelVerdict.EARLY_YES:
        print("early yes")
        print(f"removed {len(outcome.removed_colors)} colors, k' {outcome.remaining_k}")
        return 0
    print(
        f"removed {len(outcome.removed_colors)} colors,"
        f" p' {outcome.reduced_graph.p}, k' {outcome.remaining_k}"
    )
    _emit(serialize_graph(outcome.reduced_graph), args.output)
    return 0


_GENERATORS = {
    ReductionKind.PLANAR_MULTI: lambda f: sat_to_multigraph(f),
    ReductionKind.PLANAR_SIMPLE: lambda f: multigraph_to_simple(sat_to_multigraph(f)),
    ReductionKind.K4MF: lambda f: make_k4mf_connected(
        multigraph_to_simple(sat_to_multigraph(f))
    ),
    ReductionKind.OCT_ONE: lambda f: make_oct_one(sat_to_multigraph(f)),
    ReductionKind.COMPLETE: lambda f: embed_complete_artifact(
        multigraph_to_simple(sat_to_multigraph(f))
    ),
    ReductionKind.NAE_CLIQUES: lambda f: nae_to_cliques(f),
}


def _cmd_generate(args: argparse.Namespace) -> int:
    formula = parse_dimacs(_read(args.cnf))
    kind = ReductionKind(args.reduction)
    artifact = _GENERATORS[kind](formula)
    g = artifact.graph
    Path(args.output + ".ecg").write_text(serialize_graph(g))
    Path(args.output + ".prov").write_text(serialize_provenance(artifact))
    print(f"generated {kind.value}: n {g.n} m {g.m} p {g.p}")
    print(f"wrote {args.output}.ecg and {args.output}.prov")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    results: list[tuple[str, bool, str]] = [("graph-valid", True, "")]
    if args.kind != "graph":
        kind = ReductionKind(args.kind)
        color_meaning: dict[int, tuple] = {}
        vertex_meaning: dict[int, tuple] = {}
        if args.provenance is not None:
            color_meaning, vertex_meaning = parse_provenance(_read(args.provenance))
        elif kind is ReductionKind.OCT_ONE:
            vertex_meaning = {1: ("apex",)}  # the construction pins the apex there
        artifact = ReductionArtifact(
            g, kind, None, (), {}, color_meaning, vertex_meaning
        )
        report = verify_structural(artifact)
        results.extend((item.name, item.passed, item.detail) for item in report.items)
    if args.expect_colors is not None:
        ok = g.p == args.expect_colors
        results.append(
            ("color-count", ok, "" if ok else f"graph has {g.p} colors")
        )
    if args.cut is not None:
        cut = parse_cut(_read(args.cut), g.n)
        crossed = len(cut_colors(g, cut))
        results.append(("cut-valid", True, f"crosses {crossed} colors"))
        ok = is_colorful(g, cut)
        results.append(
            ("cut-colorful", ok, "" if ok else f"only {crossed} of {g.p} colors cross")
        )
    for name, passed, detail in results:
        suffix = f" ({detail})" if detail else ""
        print(f"check {name}: {'pass' if passed else 'fail'}{suffix}")
    return 0 if all(passed for _, passed, _ in results) else 1


def _cmd_stats(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    print(f"n {g.n} m {g.m} p {g.p}")
    for c in range(1, g.p + 1):
        print(
            f"color {c} edges {len(g.edges_of_color(c))}"
            f" pairs {distinct_pairs_of_color(g, c)}"
            f" span {color_span(g, c)}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coloredcut",
        description="maximum colored cut and colorful cut on edge-colored multigraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="maximize the number of cut colors")
    p_solve.add_argument("graph", help="edge-colored graph file")
    p_solve.add_argument("-k", type=int, default=None, help="exit 0 iff value >= k")
    p_solve.add_argument(
        "--algo", choices=("kernel", "brute", "greedy"), default="kernel"
    )
    p_solve.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP)
    p_solve.add_argument("--output", default=None, help="write the cut here")
    p_solve.set_defaults(func=_cmd_solve)

    p_col = sub.add_parser("colorful", help="decide if some cut crosses every color")
    p_col.add_argument("graph")
    p_col.add_argument("--algo", choices=("sat", "brute"), default="sat")
    p_col.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP)
    p_col.add_argument("--output", default=None, help="write the cut here")
    p_col.set_defaults(func=_cmd_colorful)

    p_ker = sub.add_parser("kernelize", help="remove colors that always cross")
    p_ker.add_argument("graph")
    p_ker.add_argument("--param", choices=("colors", "k"), default="colors")
    p_ker.add_argument("-k", type=int, default=None)
    p_ker.add_argument("--output", default=None, help="write the reduced graph here")
    p_ker.set_defaults(func=_cmd_kernelize)

    p_gen = sub.add_parser("generate", help="build a hardness instance from 3-CNF")
    p_gen.add_argument(
        "--reduction",
        required=True,
        choices=[kind.value for kind in ReductionKind],
    )
    p_gen.add_argument("--cnf", required=True, help="DIMACS CNF input")
    p_gen.add_argument(
        "--output", required=True, help="basename for the .ecg/.prov outputs"
    )
    p_gen.set_defaults(func=_cmd_generate)

    p_ver = sub.add_parser("verify", help="check structural guarantees")
    p_ver.add_argument(
        "--kind",
        required=True,
        choices=[kind.value for kind in ReductionKind] + ["graph"],
    )
    p_ver.add_argument("--graph", required=True)
    p_ver.add_argument("--cut", default=None)
    p_ver.add_argument("--provenance", default=None)
    p_ver.add_argument("--expect-colors", type=int, default=None)
    p_ver.set_defaults(func=_cmd_verify)

    p_stat = sub.add_parser("stats", help="per-color summary")
    p_stat.add_argument("graph")
    p_stat.set_defaults(func=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
