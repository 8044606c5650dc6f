# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from lsipp.components.popt.popt_problem import PoptProblem, to_lsipp
from lsipp.components.popt.popt_solver import (
    PoptResult,
    build_popt_moment,
    build_popt_moment_h,
    run_popt_hierarchy,
    solve_compact,
    solve_noncompact,
)
from lsipp.components.popt.stable_boundedness import (
    StableBoundednessDiagnostic,
    check_stable_boundedness_witness,
)

__all__ = [
    "PoptProblem",
    "PoptResult",
    "StableBoundednessDiagnostic",
    "build_popt_moment",
    "build_popt_moment_h",
    "check_stable_boundedness_witness",
    "run_popt_hierarchy",
    "solve_compact",
    "solve_noncompact",
    "to_lsipp",
]
