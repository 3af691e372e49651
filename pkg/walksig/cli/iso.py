"""``walksig iso``: decide isomorphism of two graphs."""

import argparse

from walksig.cli import common
from walksig.core.errors import WalksigError
from walksig.services.iso import is_isomorphic

EXIT_INCONCLUSIVE = 3


def register(subparsers) -> None:
    parser = subparsers.add_parser("iso", help="decide whether two graphs are isomorphic")
    common.add_input(parser, "g", "h")
    common.add_node_budget(parser)
    parser.set_defaults(handler=run)


def _single(args: argparse.Namespace, name: str):
    family = common.read_family(args, name)
    if len(family) != 1:
        raise WalksigError(f"{getattr(args, name)} holds {len(family)} graphs, expected one")
    return family[0]


def run(args: argparse.Namespace) -> int:
    result = is_isomorphic(_single(args, "g"), _single(args, "h"), node_budget=args.node_budget)
    print(result.verdict)
    if result.witness is not None:
        print("witness: " + " ".join(f"{v}->{w}" for v, w in enumerate(result.witness)))
    return EXIT_INCONCLUSIVE if result.verdict == "inconclusive" else 0
