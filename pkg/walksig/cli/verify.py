"""``walksig verify``: run the property suite."""

import argparse
from pathlib import Path

from walksig.cli import common
from walksig.schemas.verify import VerifyLedger
from walksig.services.verify_service import VerifyService


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "verify", help="check the closed forms and identities on builtin or given graphs"
    )
    parser.add_argument("path", type=Path, nargs="?", help="graphs to check instead of builtins")
    parser.add_argument(
        "--input-format", choices=common.INPUT_FORMATS, default="auto", help="input encoding"
    )
    common.add_tolerance(parser)
    parser.add_argument("--strict-paper", action="store_true")
    parser.add_argument(
        "--no-random", action="store_true", help="skip the seeded random-graph suites"
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.set_defaults(handler=run)


def render(ledger: VerifyLedger) -> str:
    lines = []
    for check in ledger.checks:
        status = "PASS" if check.passed else "FAIL"
        tolerance = f" (tol {check.tolerance:.3g})" if check.tolerance is not None else ""
        detail = f" {check.detail}" if check.detail else ""
        lines.append(f"{status}\t{check.name}\t{check.subject}{tolerance}{detail}")
    for observation in ledger.observations:
        lines.append(f"NOTE\t{observation.name}\t{observation.subject} {observation.detail}")
    failures = len(ledger.failures)
    lines.append(f"{len(ledger.checks)} checks, {failures} failed")
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    family = common.read_family(args) if args.path is not None else None
    service = VerifyService(tol=args.tol, strict_paper=args.strict_paper)
    ledger = service.run(family, random=not args.no_random)
    if args.format == "json":
        common.write_output(ledger.model_dump_json(indent=2), None)
    else:
        common.write_output(render(ledger), None)
    return 0 if ledger.passed else 1
