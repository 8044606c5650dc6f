# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from lsipp.components.sdp.presolve import PresolveRecord, presolve
from lsipp.components.sdp.sdp_problem import (
    LmiBlock,
    Residuals,
    SdpProblem,
    SdpSolution,
    failed_solution,
)
from lsipp.components.sdp.sdpa_format import (
    format_sdpa,
    parse_sdpa,
    read_sdpa,
    write_sdpa,
)
from lsipp.components.sdp.solver import InteriorPointSolver, solve

__all__ = [
    "InteriorPointSolver",
    "LmiBlock",
    "PresolveRecord",
    "Residuals",
    "SdpProblem",
    "SdpSolution",
    "failed_solution",
    "format_sdpa",
    "parse_sdpa",
    "presolve",
    "read_sdpa",
    "solve",
    "write_sdpa",
]
