"""``walksig convert``: rewrite a family between graph6 and edge lists."""

import argparse
from pathlib import Path

from walksig.cli import common
from walksig.services.graph_io import write_family


def register(subparsers) -> None:
    parser = subparsers.add_parser("convert", help="convert between graph6 and edge lists")
    common.add_input(parser)
    parser.add_argument("--to", choices=("graph6", "edge-list"), required=True)
    parser.add_argument("--complement", action="store_true", help="write the complements")
    parser.add_argument("-o", "--output", type=Path)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    family = common.read_family(args)
    if args.complement:
        family = family.complements()
    common.write_output(write_family(family, args.to), args.output)
    return 0
