"""``walksig scan``: group a family by signature and certify collisions."""

import argparse
import sys
from pathlib import Path

from walksig.cli import common
from walksig.services.scan_service import ScanService


def register(subparsers) -> None:
    parser = subparsers.add_parser("scan", help="group a family by signature")
    common.add_input(parser)
    common.add_invariant_options(parser)
    common.add_node_budget(parser)
    parser.add_argument("--format", choices=("json", "tsv"), default="json", help="report format")
    parser.add_argument("-o", "--output", type=Path, help="write the report here")
    parser.add_argument(
        "--complements", action="store_true", help="also scan the complementary family"
    )
    parser.add_argument("--timings", action="store_true", help="record per-phase timings")
    parser.add_argument(
        "--streaming",
        action="store_true",
        help=(
            "pre-group with one prime, escalate only inside candidate groups; "
            "singleton groups keep their one-prime signature"
        ),
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    family = common.read_family(args)
    service = ScanService(common.invariant_config(args), common.cache())
    report = service.scan(family, complements=args.complements, timings=args.timings)
    if args.format == "json":
        text = report.model_dump_json(indent=2, exclude_none=True)
    else:
        text = report.to_tsv()
    common.write_output(text, args.output)
    if report.errors:
        print(f"{len(report.errors)} graphs could not be processed", file=sys.stderr)
        return 1
    return 0
