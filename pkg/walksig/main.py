"""Command line entry point."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from walksig import __version__
from walksig.cli import convert, invariant, iso, scan, verify
from walksig.core.errors import WalksigError
from walksig.core.logging import configure

logger = logging.getLogger(__name__)

EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walksig",
        description="Quantum-walk matrix signatures for telling cospectral graphs apart.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (invariant, scan, verify, iso, convert):
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure(args.verbose)
    try:
        return args.handler(args)
    except (WalksigError, OSError, ValueError) as exc:
        logger.debug("command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
