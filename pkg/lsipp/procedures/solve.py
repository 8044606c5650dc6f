# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import sys
from argparse import Namespace
from pathlib import Path
from typing import List

from lsipp.components.popt.popt_problem import PoptProblem
from lsipp.components.popt.popt_solver import PoptResult, run_popt_hierarchy
from lsipp.components.relax.hierarchy import HierarchyRow, run_hierarchy
from lsipp.components.relax.lsipp_problem import LsippProblem, homogenize_problem
from lsipp.core.logger import Logger
from lsipp.procedures.options import EXIT_FAILED, EXIT_OK, RunOptions
from lsipp.utils.problem_io import ProblemFile, load_problem
from lsipp.utils.result_io import ResultRecord


def use_homogenized(problem: LsippProblem | PoptProblem, mode: str) -> bool:
    """'auto' homogenizes exactly the problems not marked compact"""
    if mode == "on":
        return True
    if mode == "off":
        return False
    return not problem.compact


def resolve_mode(args: Namespace, pf: ProblemFile, opts: RunOptions) -> str:
    """The --homogenize flag wins over the problem file, which wins over the settings"""
    if getattr(args, "homogenize", None) is not None:
        return args.homogenize
    if pf.homogenize != "auto":
        return pf.homogenize
    return opts.hierarchy.homogenize


def solve_problem(
    pf: ProblemFile,
    opts: RunOptions,
    k_min: int | None = None,
    mode: str | None = None,
) -> List[HierarchyRow] | List[PoptResult]:
    mode = mode if mode is not None else pf.homogenize
    problem = pf.problem
    homogenized = use_homogenized(problem, mode)
    Logger.print_status(
        f"Solving '{problem.name}' ({pf.kind}, {'homogenized' if homogenized else 'classic'}"
        f" hierarchy, k <= {opts.hierarchy.k_max}) ..."
    )
    if isinstance(problem, PoptProblem):
        return run_popt_hierarchy(
            problem,
            k_min,
            opts.hierarchy.k_max,
            compact=not homogenized,
            solver_settings=opts.solver,
            certify_settings=opts.certify,
            popt_settings=opts.popt,
            inaccurate_tol=opts.hierarchy.inaccurate_tol,
        )
    target = homogenize_problem(problem) if homogenized else problem
    return run_hierarchy(
        target,
        k_min,
        opts.hierarchy.k_max,
        solver_settings=opts.solver,
        certify_settings=opts.certify,
        inaccurate_tol=opts.hierarchy.inaccurate_tol,
    )


def all_failed(rows: List[HierarchyRow] | List[PoptResult], inaccurate_tol: float) -> bool:
    return all(
        row.solution is None or not row.solution.is_usable(inaccurate_tol) for row in rows
    )


def run_solve(args: Namespace) -> int:
    pf = load_problem(args.problem)
    if args.ball is not None:
        pf.problem.ball = args.ball
    opts = RunOptions.from_args(args)
    mode = resolve_mode(args, pf, opts)

    rows = solve_problem(pf, opts, args.kmin, mode)
    tolerances = opts.tolerances()
    tolerances["hierarchy"]["homogenize"] = mode
    record = ResultRecord.from_rows(
        problem=pf.problem.name,
        kind=pf.kind,
        path=pf.source,
        rows=rows,
        tolerances=tolerances,
        seed=opts.certify.extraction_seed,
    )

    if args.out is None or str(args.out) == "-":
        sys.stdout.write(record.to_json())
    else:
        record.write_json(Path(args.out))
        Logger.print_ok(f"Results written to '{args.out}'")
    if args.csv is not None:
        record.write_csv(Path(args.csv))

    if record.certified:
        Logger.print_ok(f"Certified value {record.best_value:+.6f} at order {record.rows[-1]['k']}")
    else:
        Logger.print_warn(f"No order up to {opts.hierarchy.k_max} was certified")

    if not rows or all_failed(rows, opts.hierarchy.inaccurate_tol):
        Logger.print_error("The solver failed at every order")
        return EXIT_FAILED
    return EXIT_OK
