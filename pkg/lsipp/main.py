# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, List

from lsipp import __version__
from lsipp.core.constants import LOG_ENV_VAR
from lsipp.core.errors import LsippError
from lsipp.core.logger import LEVEL_NAMES, Logger
from lsipp.core.settings.lsipp_settings import HOMOGENIZE_MODES, LsippSettings
from lsipp.procedures.export import run_export
from lsipp.procedures.gen import run_gen
from lsipp.procedures.options import EXIT_USAGE
from lsipp.procedures.selftest import run_selftest
from lsipp.procedures.solve import run_solve


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors, the toolkit reserves 2 for solver failures"""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        Logger.print_error(message)
        sys.exit(EXIT_USAGE)


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _add_solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kmax", type=int, help="highest relaxation order")
    parser.add_argument("--tol", type=_positive_float, help="SDP solver tolerance")
    parser.add_argument("--max-iter", type=int, help="SDP solver iteration cap")
    parser.add_argument("--rank-tol", type=_positive_float, help="numeric rank threshold")
    parser.add_argument(
        "--seed",
        dest="extraction_seed",
        type=int,
        help="seed of the random combination used in atom extraction",
    )


def _add_problem_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("problem", help="problem JSON file, '-' reads stdin")
    parser.add_argument("--homogenize", choices=HOMOGENIZE_MODES)
    parser.add_argument(
        "--ball", type=_positive_float, metavar="M", help="append the generator M - ||Y||^2"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lsipp",
        description="Semidefinite relaxations for linear semi-infinite polynomial programs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="run the relaxation hierarchy on a problem file")
    _add_problem_flags(solve)
    _add_solver_flags(solve)
    solve.add_argument("--kmin", type=int, help="lowest relaxation order, default d_P")
    solve.add_argument("--out", help="result JSON file, default stdout")
    solve.add_argument("--csv", help="per-order CSV summary")
    solve.set_defaults(handler=run_solve)

    gen = sub.add_parser("gen", help="generate random instances")
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--t", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--solve", action="store_true", help="solve every instance")
    gen.add_argument("--jobs", type=int, default=1, help="parallel workers with --solve")
    gen.add_argument("--out", help="problem JSON file, default stdout")
    gen.add_argument("--csv", help="summary CSV with --solve")
    gen.add_argument("--kmax", type=int)
    gen.add_argument("--tol", type=_positive_float)
    gen.add_argument("--rank-tol", type=_positive_float)
    gen.set_defaults(handler=run_gen)

    export = sub.add_parser("export-sdpa", help="write a moment relaxation in SDPA format")
    _add_problem_flags(export)
    export.add_argument("--k", type=int, help="relaxation order, default d_P")
    export.add_argument("--out", required=True, help="SDPA file")
    export.set_defaults(handler=run_export)

    selftest = sub.add_parser("selftest", help="solve the bundled problems")
    _add_solver_flags(selftest)
    selftest.set_defaults(handler=run_selftest)
    return parser


def _check_log_env() -> None:
    raw = os.environ.get(LOG_ENV_VAR)
    if raw is not None and raw.strip().lower() not in LEVEL_NAMES:
        Logger.print_warn(f"Unknown {LOG_ENV_VAR} value '{raw}', using 'info'")


def main(argv: List[str] | None = None) -> int:
    Logger.reload_level()
    _check_log_env()
    args = build_parser().parse_args(argv)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        LsippSettings()
        return handler(args)
    except LsippError as e:
        Logger.print_error(str(e))
        return EXIT_USAGE
    except KeyboardInterrupt:
        Logger.print_warn("\nInterrupted", prefix=False)
        return EXIT_USAGE

