"""
Ponto de entrada da CLI.

Códigos de saída: 0 decidido, 2 veredito Unknown, 1 erro de uso ou de
validação, 3 invariante interno violado.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import List, Optional, Sequence

from tgwa.cli.commands import COMMANDS
from tgwa.cli.report import Report
from tgwa.config.caps import EngineCaps
from tgwa.errors import INTERNAL_ERRORS, TGWAError

logger = logging.getLogger(__name__)

EXIT_DECIDED = 0
EXIT_USAGE = 1
EXIT_UNKNOWN = 2
EXIT_INTERNAL = 3

DATUM_COMMANDS = (
    "validate", "consistency", "reduce", "mul", "commutator", "zero-test", "gamma",
    "kernel", "finitistic", "lie-type", "zn-simple", "center", "centralizer",
    "maxcomm", "simplicity", "gwa-simplicity", "verify-relation",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _common_flags() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
    common.add_argument("--deg-cap", type=int, help="largest |g|_1 in the bounded center search")
    common.add_argument("--enum-cap", type=int, help="reduced-monomial enumeration cap of the zero test")
    common.add_argument("--coeff-cap", type=int, help="coefficient degree in the bounded center search")
    common.add_argument("--d-bound", type=int, help="largest d checked directly in the ideal condition")
    common.add_argument("--m-cap", type=int, help="largest |m|, |l| in centralizer brackets")
    common.add_argument("--box", type=int, help="box radius of the uncertified kernel search")
    common.add_argument("--bound", type=int, help="orbit length bound of the finitistic search")
    common.add_argument("--weyl-degree", type=int, help="X-word degree bound of the Weyl-pair certificate")
    common.add_argument("--timing", action="store_true", help="add wall time to the JSON report")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = _Parser(prog="tgwa", description="Exact computations in twisted generalized Weyl algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in DATUM_COMMANDS:
            p.add_argument("datum", help="datum JSON file or bundled fixture name")
        if name in ("reduce", "zero-test"):
            p.add_argument("--element", required=True)
        if name in ("mul", "commutator", "gamma"):
            p.add_argument("--left", required=True)
            p.add_argument("--right", required=True)
        if name == "verify-relation":
            p.add_argument("--lhs", required=True)
            p.add_argument("--rhs", required=True)
        if name in ("cartan-build", "cartan-kernel"):
            p.add_argument("--gcm", required=True, help="JSON integer matrix or a file holding one")
        if name == "cartan-build":
            p.add_argument("--q", default="2", help="nonzero rational q")
        if name in ("cartan-build", "sergeev-build"):
            p.add_argument("--out", help="write the datum JSON to this path")
        if name == "sergeev-build":
            p.add_argument("--f", nargs="+", required=True, help="polynomials f_1 ... f_{n+1} in u")
    return parser


def caps_from_args(args: argparse.Namespace) -> EngineCaps:
    return EngineCaps.defaults().override(
        deg_cap=args.enum_cap,
        center_deg_cap=args.deg_cap,
        coeff_cap=args.coeff_cap,
        d_bound=args.d_bound,
        m_cap=args.m_cap,
        box=args.box,
        finitistic_bound=args.bound,
        weyl_degree=args.weyl_degree,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    caps = caps_from_args(args)
    handler = COMMANDS[args.command]

    start = time.perf_counter()
    try:
        result = handler(args, caps)
    except INTERNAL_ERRORS as exc:
        logger.error("internal invariant violated: %s", exc)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (TGWAError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - start

    print(result.text)
    if args.json:
        report = Report(
            command=args.command,
            input_digest=result.digest,
            results=result.results,
            caps=caps.as_dict(),
            wall_time_s=elapsed if args.timing else None,
        )
        report.write(args.json)
    return EXIT_DECIDED if result.decided else EXIT_UNKNOWN


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
