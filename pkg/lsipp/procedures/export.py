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
from pathlib import Path

from lsipp.components.popt.popt_problem import PoptProblem, to_lsipp
from lsipp.components.popt.popt_solver import build_popt_moment, build_popt_moment_h
from lsipp.components.relax.lsipp_problem import RelaxationOrder, homogenize_problem
from lsipp.components.relax.relaxations import build_moment, build_moment_h
from lsipp.components.sdp.sdp_problem import SdpProblem
from lsipp.components.sdp.sdpa_format import write_sdpa
from lsipp.core.logger import Logger
from lsipp.procedures.options import EXIT_OK, RunOptions
from lsipp.procedures.solve import resolve_mode, use_homogenized
from lsipp.utils.problem_io import ProblemFile, load_problem


def moment_relaxation(pf: ProblemFile, k: int | None, mode: str) -> SdpProblem:
    """The moment SDP of order k (default d_P) that 'solve' would run first"""
    problem = pf.problem
    homogenized = use_homogenized(problem, mode)
    if isinstance(problem, PoptProblem):
        lsipp = to_lsipp(problem)
        target = homogenize_problem(lsipp) if homogenized else lsipp
        k = RelaxationOrder.of(target, k).k
        return build_popt_moment_h(problem, k) if homogenized else build_popt_moment(problem, k)
    if homogenized:
        hprob = homogenize_problem(problem)
        return build_moment_h(hprob, RelaxationOrder.of(hprob, k).k)
    return build_moment(problem, RelaxationOrder.of(problem, k).k)


def export_sdpa(pf: ProblemFile, k: int | None, path: Path, mode: str = "auto") -> SdpProblem:
    sdp = moment_relaxation(pf, k, mode)
    write_sdpa(sdp, path)
    return sdp


def run_export(args: Namespace) -> int:
    pf = load_problem(args.problem)
    if args.ball is not None:
        pf.problem.ball = args.ball
    opts = RunOptions.from_args(args)
    mode = resolve_mode(args, pf, opts)
    sdp = export_sdpa(pf, args.k, Path(args.out), mode)
    Logger.print_ok(
        f"Wrote {sdp.nfree} variables, {len(sdp.blocks)} blocks and"
        f" {sdp.n_eq} equality rows to '{args.out}'"
    )
    return EXIT_OK
