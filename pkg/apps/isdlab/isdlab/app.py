"""
Main entry point for the isdlab command line.

    isdlab index <file> --spec isd:-1,ga
    isdlab verify <file> --a -2:2:0.5
    isdlab sweep --n 100 --p 1e-3:1:log40 --a -2:2:0.2 --replicas auto --seed S --out dir/
    isdlab collapse <sweep.csv>...
"""

import argparse
import logging
import math
import os
import sys
from typing import Callable, Sequence

import duckdb

from isd_indices import (
    AVERAGED_INEQUALITIES,
    EnsembleConfig,
    default_replicas,
    frame_to_text,
    parse_grid,
    parse_index_spec,
    parse_index_specs,
    write_frame,
)

from .commands import load_graph, run_collapse, run_index, run_sweep, run_verify
from .config import (
    DEFAULT_INDEX_SPEC,
    DEFAULT_MIN_MEAN_DEGREE,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_REPLICA_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    LOG_FORMAT,
    LOG_LEVEL_ENV_VAR,
)
from .messages import HELP

logger = logging.getLogger("isdlab")


#########################
##### Argument types
#########################
def _grid_type(name: str) -> Callable[[str], tuple[float, ...]]:
    def parse(text: str) -> tuple[float, ...]:
        try:
            return parse_grid(text, name)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc))

    return parse


def _replicas_type(text: str) -> int | None:
    """None stands for 'auto'."""
    if text.strip().lower() == "auto":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'auto', got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"replicas must be positive, got {value}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


#########################
##### Parser
#########################
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help=HELP.COMMON.VERBOSE)
    verbosity.add_argument("-q", "--quiet", action="store_true", help=HELP.COMMON.QUIET)
    common.add_argument(
        "--format",
        choices=["csv", "json"],
        default=DEFAULT_OUTPUT_FORMAT,
        help=HELP.COMMON.FORMAT,
    )

    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument("file", nargs="?", help=HELP.COMMON.GRAPH_FILE)
    graph_input.add_argument("--graph", metavar="NAME", help=HELP.COMMON.GRAPH_NAME)
    graph_input.add_argument("--permissive", action="store_true", help=HELP.COMMON.PERMISSIVE)
    graph_input.add_argument("--out", metavar="PATH", help=HELP.COMMON.OUT)

    parser = argparse.ArgumentParser(
        prog="isdlab", description=HELP.DESCRIPTION, epilog=HELP.EPILOG
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    index = verbs.add_parser(
        "index", parents=[common, graph_input], help=HELP.INDEX.SUMMARY
    )
    index.add_argument("--spec", required=True, help=HELP.INDEX.SPEC)
    index.set_defaults(handler=_index)

    verify = verbs.add_parser(
        "verify", parents=[common, graph_input], help=HELP.VERIFY.SUMMARY
    )
    verify.add_argument(
        "--a", dest="a_grid", required=True, type=_grid_type("a_grid"), help=HELP.VERIFY.A_GRID
    )
    verify.set_defaults(handler=_verify)

    sweep = verbs.add_parser("sweep", parents=[common], help=HELP.SWEEP.SUMMARY)
    sweep.add_argument("--n", type=int, required=True, help=HELP.SWEEP.N)
    sweep.add_argument(
        "--p", dest="p_grid", required=True, type=_grid_type("p_grid"), help=HELP.SWEEP.P_GRID
    )
    sweep.add_argument("--a", dest="a_grid", type=_grid_type("a_grid"), help=HELP.SWEEP.A_GRID)
    sweep.add_argument("--spec", default=DEFAULT_INDEX_SPEC, help=HELP.SWEEP.SPEC)
    sweep.add_argument("--replicas", type=_replicas_type, default=None, help=HELP.SWEEP.REPLICAS)
    sweep.add_argument(
        "--replica-budget",
        type=_positive_int,
        default=DEFAULT_REPLICA_BUDGET,
        help=HELP.SWEEP.REPLICA_BUDGET,
    )
    sweep.add_argument("--seed", type=int, required=True, help=HELP.SWEEP.SEED)
    sweep.add_argument(
        "--check",
        action="append",
        default=[],
        choices=list(AVERAGED_INEQUALITIES),
        help=HELP.SWEEP.CHECK,
    )
    sweep.add_argument(
        "--check-a", dest="check_a_grid", type=_grid_type("check_a"), help=HELP.SWEEP.CHECK_A
    )
    sweep.add_argument("--strict-samples", action="store_true", help=HELP.SWEEP.STRICT_SAMPLES)
    sweep.add_argument("--out", default=".", metavar="DIR", help=HELP.SWEEP.OUT_DIR)
    sweep.add_argument("--zip", action="store_true", help=HELP.SWEEP.ZIP)
    sweep.add_argument("--progress", action="store_true", help=HELP.SWEEP.PROGRESS)
    sweep.set_defaults(handler=_sweep)

    collapse = verbs.add_parser("collapse", parents=[common], help=HELP.COLLAPSE.SUMMARY)
    collapse.add_argument("files", nargs="+", help=HELP.COLLAPSE.FILES)
    collapse.add_argument(
        "--min-degree", type=float, default=DEFAULT_MIN_MEAN_DEGREE, help=HELP.COLLAPSE.MIN_DEGREE
    )
    collapse.add_argument("--max-degree", type=float, default=math.inf, help=HELP.COLLAPSE.MAX_DEGREE)
    collapse.add_argument("--family", help=HELP.COLLAPSE.FAMILY)
    collapse.add_argument(
        "--a", dest="a_grid", type=_grid_type("a_grid"), help=HELP.COLLAPSE.A_GRID
    )
    collapse.add_argument("--trusted-only", action="store_true", help=HELP.COLLAPSE.TRUSTED_ONLY)
    collapse.add_argument("--out", metavar="PATH", help=HELP.COMMON.OUT)
    collapse.set_defaults(handler=_collapse)

    return parser


#########################
##### Verb handlers
#########################
def _emit(df, args: argparse.Namespace) -> None:
    if args.out:
        write_frame(df, args.out, args.format)
    else:
        sys.stdout.write(frame_to_text(df, args.format))


def _index(args: argparse.Namespace) -> int:
    graph = load_graph(args.file, args.graph, strict=not args.permissive)
    _emit(run_index(graph, parse_index_specs(args.spec)), args)
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    graph = load_graph(args.file, args.graph, strict=not args.permissive)
    df, all_hold = run_verify(graph, args.a_grid)
    _emit(df, args)
    if not all_hold:
        logger.error("at least one applicable bound is violated")
        return EXIT_VIOLATION
    return EXIT_OK


def _sweep(args: argparse.Namespace) -> int:
    a_grid = args.a_grid
    # a bare family such as "isd" sweeps every exponent of the grid
    spec = parse_index_spec(args.spec, default_exponent=a_grid[0] if a_grid else 1.0)
    if a_grid is None:
        if spec.config.takes_exponent:
            raise ValueError(f"--a is required for {spec.config.display_name}")
        a_grid = (0.0,)
    replicas = args.replicas or default_replicas(args.n, args.replica_budget)

    cfg = EnsembleConfig(
        n=args.n,
        p_grid=args.p_grid,
        a_grid=a_grid,
        replicas=replicas,
        seed=args.seed,
        degenerate_policy="raise" if args.strict_samples else "skip",
    )
    output = run_sweep(
        cfg,
        spec,
        args.check,
        args.out,
        check_a_grid=args.check_a_grid,
        fmt=args.format,
        as_zip=args.zip,
        progress=args.progress,
    )
    for path in output.paths:
        print(path)
    if output.violations:
        logger.error("%d averaged-inequality cell(s) fell below -3 stderr", output.violations)
        return EXIT_VIOLATION
    return EXIT_OK


def _collapse(args: argparse.Namespace) -> int:
    filters = {
        "family": args.family,
        "a": list(args.a_grid) if args.a_grid else None,
        "trusted_only": args.trusted_only,
    }
    df = run_collapse(args.files, filters, args.min_degree, args.max_degree)
    _emit(df, args)
    return EXIT_OK


#########################
##### Entry point
#########################
def _configure_logging(verbose: bool, quiet: bool) -> None:
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    else:
        name = os.environ.get(LOG_LEVEL_ENV_VAR, "INFO").strip().upper()
        level = logging.getLevelNamesMapping().get(name, logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


_GRID_OPTIONS = ("--a", "--p", "--check-a")


def _bind_grid_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--a -2:2:0.5`` as ``--a=-2:2:0.5``; argparse reads a leading '-' as an option."""
    tokens = list(argv)
    out: list[str] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if token in _GRID_OPTIONS and i + 1 < len(tokens):
            out.append(f"{token}={tokens[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_bind_grid_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    _configure_logging(args.verbose, args.quiet)
    try:
        return args.handler(args)
    except (ValueError, OSError, duckdb.Error) as exc:
        logger.debug("%s failed", args.verb, exc_info=True)
        print(f"isdlab {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
