"""Options shared by several subcommands."""

import argparse
from pathlib import Path
from typing import Optional

from walksig.core.cache import SignatureCache, open_cache
from walksig.core.config import (
    DEFAULT_INVARIANT,
    DEFAULT_MODE,
    DEFAULT_NODE_BUDGET,
    DEFAULT_TOLERANCE,
    EXACT_CUTOFF,
    settings,
)
from walksig.models.graph import GraphFamily
from walksig.schemas.invariant import INVARIANT_KINDS, InvariantConfig
from walksig.services.graph_io import load_family_file

INPUT_FORMATS = ("auto", "graph6", "edge-list")


def add_input(parser: argparse.ArgumentParser, *names: str) -> None:
    for name in names or ("path",):
        parser.add_argument(name, type=Path, help="graph6 or edge-list file")
    parser.add_argument(
        "--input-format", choices=INPUT_FORMATS, default="auto", help="input encoding"
    )


def add_invariant_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--invariant", choices=INVARIANT_KINDS, default=DEFAULT_INVARIANT)
    parser.add_argument(
        "--power", type=int, help="power p for splus-u-p and adjacency-power-support"
    )
    parser.add_argument("--mode", choices=("exact", "modular"), default=DEFAULT_MODE)
    parser.add_argument(
        "--exact-cutoff",
        type=int,
        default=EXACT_CUTOFF,
        help="largest dimension for exact characteristic polynomials",
    )
    parser.add_argument(
        "--strict-paper",
        action="store_true",
        help="direct S+(U^3) sets every i=l, j=m entry, even when r = 0",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")


def add_tolerance(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--tol", type=float, default=DEFAULT_TOLERANCE, help="base tolerance, scaled by dimension"
    )


def add_node_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--node-budget",
        type=int,
        default=DEFAULT_NODE_BUDGET,
        help="isomorphism search nodes before giving up",
    )


def invariant_config(args: argparse.Namespace) -> InvariantConfig:
    return InvariantConfig(
        kind=args.invariant,
        power=args.power,
        mode=args.mode,
        exact_cutoff=args.exact_cutoff,
        strict_paper=args.strict_paper,
        jobs=args.jobs,
        node_budget=getattr(args, "node_budget", DEFAULT_NODE_BUDGET),
        streaming=getattr(args, "streaming", False),
    )


def read_family(args: argparse.Namespace, name: str = "path") -> GraphFamily:
    return load_family_file(getattr(args, name), fmt=args.input_format)


def cache() -> Optional[SignatureCache]:
    return open_cache(settings.cache_dir)


def write_output(text: str, output: Optional[Path]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output is None:
        print(text, end="")
    else:
        output.write_text(text, encoding="utf-8")
