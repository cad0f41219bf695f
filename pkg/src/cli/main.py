"""
Argument parsing and the run loop behind the topogalois command
"""

import argparse
import logging
import sys
from typing import List, Optional

from .. import APP_NAME, __version__
from .report import EXIT_ERROR, Report, render
from ..config.settings import OUTPUT_FORMATS, RunConfig, ToleranceConfig
from ..processors.classification_processor import ClassificationProcessor
from ..utils.errors import ConfigurationError, TopoGaloisError

logger = logging.getLogger(__name__)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("run options")
    group.add_argument("--tol-root", type=float, help="root finding and Newton tolerance")
    group.add_argument("--tol-ode", type=float, help="ODE integration tolerance")
    group.add_argument("--tol-cluster", type=float, help="root clustering and geometric tolerance")
    group.add_argument("--tol-rank", type=float, help="numeric rank threshold")
    group.add_argument("--seed", type=int, help="seed of every random choice")
    group.add_argument("--format", choices=OUTPUT_FORMATS, dest="output_format", help="report format")
    group.add_argument("--threads", type=int, help="loops tracked concurrently")
    group.add_argument("--check-stability", action="store_true",
                       help="repeat with tolerances tightened tenfold and compare verdicts")
    group.add_argument("--debug", action="store_true", default=None, help="debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topogalois",
        description="Topological Galois classification of algebraic functions, polynomial inverses, "
                    "Fuchsian systems and circular-arc polygons")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {__version__}")
    common = _common_options()
    sub = parser.add_subparsers(dest="subcommand", required=True)

    algebraic = sub.add_parser("algebraic", parents=[common], help="algebraic function y(x) with f(x, y) = 0")
    algebraic.add_argument("polynomial", help='relation, e.g. "y^5 + y - x"')
    algebraic.add_argument("--kmax", type=int, help="largest k of the k-radical verdicts")

    invert = sub.add_parser("invert-poly", parents=[common], help="inverse function of a polynomial p(z)")
    invert.add_argument("polynomial", help='polynomial in z, e.g. "z^5 - z + 1"')
    invert.add_argument("--k", type=int, help="also decide invertibility by k-radicals")

    fuchsian = sub.add_parser("fuchsian", parents=[common], help="Fuchsian system or scalar equation (JSON)")
    fuchsian.add_argument("file", help="JSON record with poles and residues or an equation")
    fuchsian.add_argument("--kmax", type=int, help="k of the k-quadrature verdict")
    fuchsian.add_argument("--assume-small", action="store_true", default=None,
                          help="assert that the residues are small enough")

    polygon = sub.add_parser("polygon", parents=[common], help="circular-arc polygon (JSON)")
    polygon.add_argument("file", help="JSON list of circle and line sides")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """RunConfig from the environment, then the flags that were given"""
    defaults = ToleranceConfig()
    tolerances = ToleranceConfig(
        root=args.tol_root if args.tol_root is not None else defaults.root,
        ode=args.tol_ode if args.tol_ode is not None else defaults.ode,
        cluster=args.tol_cluster if args.tol_cluster is not None else defaults.cluster,
        rank=args.tol_rank if args.tol_rank is not None else defaults.rank,
    )
    return RunConfig().apply_overrides(
        tolerances=tolerances,
        seed=args.seed,
        kmax=getattr(args, "kmax", None),
        assume_small=getattr(args, "assume_small", None),
        output_format=args.output_format,
        threads=args.threads,
        debug=args.debug,
    )


def run(subcommand: str, source: str, config: RunConfig, k: Optional[int] = None,
        check_stability: bool = False) -> Report:
    """Classify one input; exit code of the report is 0 when classified, 2 when inconclusive"""
    result = ClassificationProcessor().process(subcommand, source, config, k, check_stability)
    return Report(subcommand, result["input"], result["intermediates"], result["verdicts"], config.to_dict())


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except (ConfigurationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if config.debug:
        logging.getLogger().setLevel(logging.DEBUG)

    source = args.polynomial if args.subcommand in ("algebraic", "invert-poly") else args.file
    try:
        report = run(args.subcommand, source, config, getattr(args, "k", None), args.check_stability)
    except (TopoGaloisError, ValueError, ArithmeticError, OSError) as e:
        logger.error(f"{args.subcommand} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    print(render(report, config.output_format))
    return report.exit_code
