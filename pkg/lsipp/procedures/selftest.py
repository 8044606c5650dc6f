# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from argparse import Namespace
from dataclasses import dataclass
from typing import List

from lsipp.core.constants import PROBLEMS_DIR
from lsipp.core.logger import DialogType, Logger
from lsipp.procedures.options import EXIT_FAILED, EXIT_OK, RunOptions
from lsipp.procedures.solve import solve_problem
from lsipp.utils.problem_io import load_problem


@dataclass(frozen=True)
class GoldenCase:
    file: str
    value: float
    tol: float = 1e-3


GOLDEN_CASES: List[GoldenCase] = [
    GoldenCase("interval_moments.json", -1.7869),
    GoldenCase("bifolium.json", 125 / 104),
    GoldenCase("cusp.json", -0.75),
    GoldenCase("hyperbolic_popt.json", 2 + (1 + 5**0.5) / 2),
]


def run_case(case: GoldenCase, opts: RunOptions) -> bool:
    pf = load_problem(PROBLEMS_DIR.joinpath(case.file))
    rows = solve_problem(pf, opts)
    last = rows[-1]
    ok = last.certified and abs(last.value - case.value) <= case.tol
    line = f"{case.file}: {last.value:+.6f} at order {last.k} (expected {case.value:+.4f})"
    if ok:
        Logger.print_ok(line)
    else:
        Logger.print_error(f"{line}, certified={last.certified}")
    return ok


def run_selftest(args: Namespace) -> int:
    opts = RunOptions.from_args(args)
    failed = [case.file for case in GOLDEN_CASES if not run_case(case, opts)]
    if failed:
        Logger.print_dialog(
            DialogType.ERROR,
            ["The following problems did not reproduce their known values:", *failed],
        )
        return EXIT_FAILED
    Logger.print_ok(f"All {len(GOLDEN_CASES)} golden problems reproduced")
    return EXIT_OK
