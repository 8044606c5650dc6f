# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from lsipp.components.certify.certificate import Certificate, certify
from lsipp.components.moment.moment_vector import MomentVector
from lsipp.components.relax.lsipp_problem import (
    HomogenizedProblem,
    LsippProblem,
    RelaxationOrder,
)
from lsipp.components.relax.relaxations import build_moment, build_moment_h
from lsipp.components.sdp.sdp_problem import SdpProblem, SdpSolution
from lsipp.components.sdp.solver import solve
from lsipp.core.logger import Logger
from lsipp.core.settings.lsipp_settings import CertifySettings, SolverSettings
from lsipp.core.types.solver_status import SolverStatus


@dataclass
class HierarchyRow:
    k: int
    value: float
    status: SolverStatus
    solve_ms: float
    certificate: Optional[Certificate] = None
    x_star: Optional[np.ndarray] = None
    solution: Optional[SdpSolution] = field(default=None, repr=False)

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.certified

    @property
    def usable(self) -> bool:
        return self.solution is not None and bool(np.all(np.isfinite(self.solution.z_star)))


def build_relaxation(prob: LsippProblem | HomogenizedProblem, k: int) -> SdpProblem:
    if isinstance(prob, HomogenizedProblem):
        return build_moment_h(prob, k)
    return build_moment(prob, k)


def solve_order(
    prob: LsippProblem | HomogenizedProblem,
    k: int,
    solver_settings: SolverSettings | None = None,
) -> HierarchyRow:
    sdp = build_relaxation(prob, k)
    start = time.perf_counter()
    solution = solve(sdp, solver_settings)
    solve_ms = 1000.0 * (time.perf_counter() - start)

    x_star = None
    if np.all(np.isfinite(solution.eq_duals[: prob.m])):
        # the a-rows come first, their multipliers in the minimization form are -x
        x_star = -solution.eq_duals[: prob.m]
    return HierarchyRow(
        k=k,
        value=solution.objective_value,
        status=solution.status,
        solve_ms=solve_ms,
        x_star=x_star,
        solution=solution,
    )


def run_hierarchy(
    prob: LsippProblem | HomogenizedProblem,
    k_min: int | None = None,
    k_max: int | None = None,
    certify_orders: bool = True,
    solver_settings: SolverSettings | None = None,
    certify_settings: CertifySettings | None = None,
    inaccurate_tol: float = 1e-6,
) -> List[HierarchyRow]:
    """
    Solve the moment relaxations for k = k_min, ..., k_max and stop at the
    first certified order. Solver failures are recorded and the sweep
    moves on to the next order.
    """
    d_P = RelaxationOrder.of(prob).d_P
    k_min = d_P if k_min is None else k_min
    k_max = max(k_min, 6) if k_max is None else k_max
    RelaxationOrder.of(prob, k_min)

    rows: List[HierarchyRow] = []
    for k in range(k_min, k_max + 1):
        row = solve_order(prob, k, solver_settings)
        solution = row.solution
        assert solution is not None
        if certify_orders and solution.is_usable(inaccurate_tol):
            z_star = MomentVector(prob.nvars, 2 * k, solution.z_star)
            row.certificate = certify(prob, z_star, k, certify_settings)
        rows.append(row)

        flag = " certified" if row.certified else ""
        Logger.print_info(
            f"order {k}: value {row.value:+.6f} status {row.status}"
            f" ({row.solve_ms:.0f} ms){flag}"
        )
        if row.certified:
            break
    return rows


def best_row(rows: List[HierarchyRow]) -> Optional[HierarchyRow]:
    """The certified row if any, else the last row with a finite value"""
    for row in reversed(rows):
        if row.certified:
            return row
    finite = [row for row in rows if np.isfinite(row.value)]
    return finite[-1] if finite else None
