"""
========================================
ARF ENUMERATION - COMMAND LINE INTERFACE
========================================

Command-line front-end for the enumeration, counting, rendering and
verification modules.

Commands:
- gen1    Gen(n), the Arf numerical semigroups of genus n
- genr    Gen(r,n), or all trees with --twisted
- table   r x n count table as CSV (optionally with the NG row and a plot)
- render  DOT or ASCII drawing of one tree
- verify  oracle and axiom suite for Gen(r,n)

Exit codes:
- 0 success
- 1 verification failure
- 2 usage error (bad arguments, invalid sequences or trees)
- 3 configured cap exceeded (genr --twisted rank)

Stdout carries only results; logs and progress bars go to stderr.

Usage:
    python Enumeration/cli.py gen1 --genus 2
    python Enumeration/cli.py genr -r 3 -n 8 --twisted --count
    python Enumeration/cli.py table --rmax 16 --nmax 15 --ng
    python Enumeration/cli.py table --rmax 9 --nmax 8 --twisted

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

import argparse
import json
import logging
import os
import sys

from config_args import ConfigArgs
from genus1 import enumerate_genus
from genusr import (
    GenusTable,
    RankTooLargeForTwisted,
    count_genus_trees,
    count_table,
    enumerate_all_trees,
    enumerate_genus_trees,
)
from render import render_ascii, render_dot
from tree import matrix_to_json, node_grid, tree_from_json, tree_to_json
from verify import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def build_parser():
    """
    Set up the argument parser with one subparser per command.

    Flags that mirror config.ini keys default to None so that an unset flag
    never overrides the file.
    """
    parser = argparse.ArgumentParser(
        prog="arf-enum", description="Arf semigroup enumeration by genus"
    )
    parser.add_argument("--config", type=str, help="Path to config.ini")
    parser.add_argument("--jobs", type=int, help="Worker processes (ARF_ENUM_JOBS wins)")
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument(
        "--pretty", action="store_true", default=None, help="Human-readable text output"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen1 = sub.add_parser("gen1", help="Arf numerical semigroups of genus n")
    gen1.add_argument("-n", "--genus", type=int, required=True)
    gen1.add_argument("--count", action="store_true", help="Print the cardinality only")

    genr = sub.add_parser("genr", help="Trees of rank r and genus n")
    genr.add_argument("-r", "--rank", type=int, required=True)
    genr.add_argument("-n", "--genus", type=int, required=True)
    genr.add_argument("--twisted", action="store_true", help="Include twisted trees")
    genr.add_argument("--count", action="store_true", help="Print the cardinality only")
    genr.add_argument("--split", type=int, help="Left rank of the recursion")
    genr.add_argument(
        "--no-reversal",
        dest="use_reversal",
        action="store_false",
        default=None,
        help="Scan the full left genus range instead of adding reversals",
    )
    genr.add_argument("--max-rank", dest="max_twisted_rank", type=int, help="Twisted rank cap")

    table = sub.add_parser("table", help="Count table as CSV")
    table.add_argument("--rmax", type=int, required=True)
    table.add_argument("--nmax", type=int, required=True)
    table.add_argument("--twisted", action="store_true", help="Count twisted trees too")
    table.add_argument("--ng", action="store_true", help="Append the NG(n) row")
    table.add_argument(
        "--materialize", action="store_true", help="Count by listing trees instead of the DP"
    )
    table.add_argument("--plot", type=str, help="Also save a heatmap PNG to this path")

    render = sub.add_parser("render", help="Draw one tree")
    render.add_argument("tree", type=str, help="Tree JSON, inline or as a file path")
    render.add_argument("--format", choices=["dot", "ascii"], default="dot")

    verify = sub.add_parser("verify", help="Run the verification suite")
    verify.add_argument("-r", "--rank", type=int, required=True)
    verify.add_argument("-n", "--genus", type=int, required=True)
    verify.add_argument("--level", choices=["quick", "full"], default="quick")

    return parser


def _dump(data, pretty: bool) -> str:
    if pretty:
        return json.dumps(data, indent=2)
    return json.dumps(data, separators=(",", ":"))


def _load_tree_argument(raw: str):
    if os.path.isfile(raw):
        with open(raw, "r") as f:
            raw = f.read()
    return tree_from_json(json.loads(raw))


def cmd_gen1(args, config) -> int:
    """Print Gen(n) as JSON, one sequence per line with --pretty, or its size."""
    sequences = enumerate_genus(args.genus)
    if args.count:
        print(len(sequences))
    elif config.get("pretty"):
        for M in sequences:
            print(M)
    else:
        print(_dump([M.to_json() for M in sequences], False))
    return EXIT_OK


def cmd_genr(args, config) -> int:
    """
    Print Gen(r,n), or all trees with --twisted.

    The untwisted --count path uses the counting DP unless --split or
    --no-reversal ask for the listing recursion.
    """
    r, n = args.rank, args.genus
    progress = config.get("progress") and not args.quiet
    if args.twisted:
        trees = enumerate_all_trees(
            r, n, max_rank=config.get("max_twisted_rank"), progress=progress
        )
        encode = matrix_to_json
    else:
        if args.count and args.split is None and args.use_reversal is None:
            print(count_genus_trees(r, n))
            return EXIT_OK
        table = GenusTable(split=config.get("split"), use_reversal=config.get("use_reversal"))
        trees = enumerate_genus_trees(r, n, table=table)
        encode = tree_to_json

    if args.count:
        print(len(trees))
    elif config.get("pretty"):
        for T in trees:
            print(T)
    else:
        print(_dump([encode(T) for T in trees], False))
    return EXIT_OK


def cmd_table(args, config) -> int:
    """Write the count table as CSV to stdout and optionally plot it."""
    progress = config.get("progress") and not args.quiet
    frame = count_table(
        args.rmax,
        args.nmax,
        twisted=args.twisted,
        materialize=args.materialize,
        with_ng=args.ng,
        progress=progress,
    )
    frame.to_csv(sys.stdout)
    if args.plot:
        # imported lazily, matplotlib is slow to load
        from plots import plot_count_table

        title = "All trees" if args.twisted else "Untwisted trees"
        plot_count_table(frame, args.plot, title=f"{title} by rank and genus")
    return EXIT_OK


def cmd_render(args, config) -> int:
    """Draw one tree, given inline or as a file path."""
    grid = node_grid(_load_tree_argument(args.tree))
    if args.format == "ascii":
        sys.stdout.write(render_ascii(grid))
    else:
        sys.stdout.write(render_dot(grid))
    return EXIT_OK


def cmd_verify(args, config) -> int:
    """Run the verification suite and print its JSON report."""
    report = run_suite(
        args.rank,
        args.genus,
        level=args.level,
        jobs=config.get("jobs"),
        margin=config.get("box_margin"),
        samples=config.get("chain_samples"),
        seed=config.get("seed"),
        max_oracle_rank=config.get("max_oracle_rank"),
        max_twisted_rank=config.get("max_twisted_rank"),
        progress=config.get("progress") and not args.quiet,
    )
    print(_dump(report.to_json(), bool(config.get("pretty"))))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


COMMANDS = {
    "gen1": cmd_gen1,
    "genr": cmd_genr,
    "table": cmd_table,
    "render": cmd_render,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    """
    Entry point.

    Args:
        argv (list, optional): arguments without the program name

    Returns:
        int: process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    overrides = {
        "jobs": args.jobs,
        "pretty": args.pretty,
        "split": getattr(args, "split", None),
        "use_reversal": getattr(args, "use_reversal", None),
        "max_twisted_rank": getattr(args, "max_twisted_rank", None),
    }
    try:
        config = ConfigArgs(config_path=args.config, overrides=overrides)
        logger.debug(f"Configuration: {config}")
        return COMMANDS[args.command](args, config)
    except RankTooLargeForTwisted as exc:
        logger.error(str(exc))
        return EXIT_CAP
    except ValueError as exc:
        logger.error(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
