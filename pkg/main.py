"""
Command-line entry point of the Skorokhod completion toolkit.

    python main.py rho f.yaml g.yaml --tol 1e-4
    python main.py rho-plus x.yaml y.yaml
    python main.py visualize x.yaml --svg x.svg --csv x.csv
    python main.py equiv x.yaml y.yaml
    python main.py canonical x.yaml
    python main.py instantons x.yaml
    python main.py demo-triangle --theta-list 4,8,16,32,64 --outdir artifacts

Exit codes: 0 success or equivalent, 1 not-equivalent or a failed demo bound,
2 document error, 3 precondition error, 4 I/O error, 5 equivalence unknown.
"""

import argparse
import logging
import sys
from typing import List, Optional

from colorama import Fore, Style, init
from rich.console import Console
from rich.panel import Panel

from src.cli.demo import DEFAULT_THETAS, parse_theta_list
from src.errors.core import (
    ApplicationError,
    CauchyConvergenceError,
    DocumentError,
    DomainError,
    InvariantViolation,
    LoggingSetupError,
    OutputError,
    PreconditionError,
)
from src.services.skorokhod_service import SkorokhodService
from src.utils.setup_logging import LOG_LEVELS

init(autoreset=True)
stdout = Console(highlight=False, soft_wrap=True)
stderr = Console(stderr=True)

EXIT_DOCUMENT = 2
EXIT_PRECONDITION = 3
EXIT_IO = 4

ERROR_EXIT_CODES = (
    (DocumentError, EXIT_DOCUMENT),
    (OutputError, EXIT_IO),
    (LoggingSetupError, EXIT_IO),
    (PreconditionError, EXIT_PRECONDITION),
    (DomainError, EXIT_PRECONDITION),
    (InvariantViolation, EXIT_PRECONDITION),
    (CauchyConvergenceError, EXIT_PRECONDITION),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skoro", description="Skorokhod distances and their completion.")
    parser.add_argument("--config", help="Skorofile to load (default: $SKORO_CONFIG or ./Skorofile)")
    parser.add_argument("--log-level", choices=LOG_LEVELS, help="Overrides the configured log level")
    commands = parser.add_subparsers(dest="command", required=True)

    rho = commands.add_parser("rho", help="Skorokhod distance of two functions with a certificate")
    rho.add_argument("file_f")
    rho.add_argument("file_g")
    rho.add_argument("--tol", type=float, default=None)
    rho.add_argument("--exact", action="store_true", help="Exact distance of two step functions")

    rho_plus = commands.add_parser("rho-plus", help="Semi-distance of two turbofunctions with a certificate")
    rho_plus.add_argument("file_x")
    rho_plus.add_argument("file_y")
    rho_plus.add_argument("--tol", type=float, default=None)

    visualize = commands.add_parser("visualize", help="Write the visualization as SVG and/or CSV")
    visualize.add_argument("file_x")
    visualize.add_argument("--svg")
    visualize.add_argument("--csv")

    equiv = commands.add_parser("equiv", help="Decide equivalence of two turbofunctions")
    equiv.add_argument("file_x")
    equiv.add_argument("file_y")

    canonical = commands.add_parser("canonical", help="Print or save the canonical form")
    canonical.add_argument("file_x")
    canonical.add_argument("--out")

    found = commands.add_parser("instantons", help="List the instantons of a turbofunction")
    found.add_argument("file_x")

    demo = commands.add_parser("demo-triangle", help="Run the triangle-bump completion demo")
    demo.add_argument("--theta-list", default=",".join(f"{t:g}" for t in DEFAULT_THETAS))
    demo.add_argument("--tol", type=float, default=None)
    demo.add_argument("--outdir", default=None)
    return parser


def run(service: SkorokhodService, args: argparse.Namespace):
    if args.command == "rho":
        return service.rho(args.file_f, args.file_g, args.tol, args.exact)
    if args.command == "rho-plus":
        return service.rho_plus(args.file_x, args.file_y, args.tol)
    if args.command == "visualize":
        return service.visualize(args.file_x, args.svg, args.csv)
    if args.command == "equiv":
        return service.equiv(args.file_x, args.file_y)
    if args.command == "canonical":
        return service.canonical(args.file_x, args.out)
    if args.command == "instantons":
        return service.instantons(args.file_x)
    return service.demo_triangle(parse_theta_list(args.theta_list), args.tol, args.outdir)


def exit_code_for(error: ApplicationError) -> int:
    for kind, code in ERROR_EXIT_CODES:
        if isinstance(error, kind):
            return code
    return EXIT_PRECONDITION


def main(argv: Optional[List[str]] = None) -> int:
    logger = logging.getLogger("skoro")
    args = build_parser().parse_args(argv)
    service = None
    try:
        service = SkorokhodService(config_path=args.config).initialize(args.log_level)
        result = run(service, args)
        for line in result.lines:
            stdout.out(line, highlight=False)
        if args.command == "demo-triangle":
            style = "green" if result.exit_code == 0 else "red"
            stderr.print(Panel.fit(
                f"[{style}]{'all bounds hold' if result.exit_code == 0 else 'some bounds failed'}[/{style}]",
                title="demo-triangle",
            ))
        return result.exit_code
    except ApplicationError as e:
        logger.error("%s: %s", type(e).__name__, e)
        print(Fore.RED + Style.BRIGHT + f"error: {e}", file=sys.stderr)
        return exit_code_for(e)
    finally:
        if service is not None:
            service.shutdown()


if __name__ == "__main__":
    sys.exit(main())
