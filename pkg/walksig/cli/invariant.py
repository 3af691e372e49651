"""``walksig invariant``: one signature line per graph."""

import argparse
import logging
import sys
from pathlib import Path

from walksig.cli import common
from walksig.core.errors import WalksigError
from walksig.services.scan_service import ScanService, describe_error
from walksig.services.walk import build_U, s_plus_power

logger = logging.getLogger(__name__)

DUMPS = ("u", "splus")


def register(subparsers) -> None:
    parser = subparsers.add_parser("invariant", help="print the signature of every graph")
    common.add_input(parser)
    common.add_invariant_options(parser)
    parser.add_argument("--dump", choices=DUMPS, help="also write matrix dumps (debugging)")
    parser.add_argument("--dump-dir", type=Path, default=Path("."), help="where dumps go")
    parser.set_defaults(handler=run)


def _dump(args: argparse.Namespace, index: int, g) -> None:
    args.dump_dir.mkdir(parents=True, exist_ok=True)
    if args.dump == "u":
        text = build_U(g).to_triplets()
    else:
        text = s_plus_power(g, common.invariant_config(args).effective_power).to_text()
    path = args.dump_dir / f"graph-{index}.{args.dump}.txt"
    path.write_text(text + "\n", encoding="ascii")
    logger.info("wrote %s", path)


def run(args: argparse.Namespace) -> int:
    family = common.read_family(args)
    config = common.invariant_config(args)
    outcomes = ScanService(config, common.cache()).signatures(family.members)
    failed = 0
    for index, (result, error) in enumerate(outcomes):
        if result is None:
            failed += 1
            print(f"graph {index}: {error}", file=sys.stderr)
            continue
        print(f"{index}\t{result.serialize()}")
        if args.dump:
            try:
                _dump(args, index, family[index])
            except WalksigError as exc:
                print(f"graph {index}: dump failed: {describe_error(exc)}", file=sys.stderr)
    return 1 if failed else 0
