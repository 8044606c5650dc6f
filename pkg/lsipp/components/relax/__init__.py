# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from lsipp.components.relax.lsipp_problem import (
    HomogenizedProblem,
    LsippProblem,
    RelaxationOrder,
    homogenize_problem,
)
from lsipp.components.relax.relaxations import (
    build_moment,
    build_moment_h,
    build_sos,
    build_sos_h,
)

__all__ = [
    "HomogenizedProblem",
    "LsippProblem",
    "RelaxationOrder",
    "build_moment",
    "build_moment_h",
    "build_sos",
    "build_sos_h",
    "homogenize_problem",
]
