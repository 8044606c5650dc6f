# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from enum import Enum
from typing import Dict, Literal

StatusText = Literal[
    "Optimal",
    "Infeasible",
    "Unbounded",
    "NumericalTrouble",
    "MaxIter",
]


class SolverStatus(Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"
    NUMERICAL_TROUBLE = "NumericalTrouble"
    MAX_ITER = "MaxIter"

    def __str__(self) -> str:
        return self.value

    @staticmethod
    def from_text(text: str) -> "SolverStatus":
        return StatusMap[text]  # type: ignore[index]


StatusMap: Dict[StatusText, SolverStatus] = {
    "Optimal": SolverStatus.OPTIMAL,
    "Infeasible": SolverStatus.INFEASIBLE,
    "Unbounded": SolverStatus.UNBOUNDED,
    "NumericalTrouble": SolverStatus.NUMERICAL_TROUBLE,
    "MaxIter": SolverStatus.MAX_ITER,
}
