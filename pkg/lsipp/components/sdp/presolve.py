# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
import scipy.linalg

from lsipp.components.sdp.sdp_problem import LmiBlock, SdpProblem, SdpSolution
from lsipp.core.logger import Logger
from lsipp.core.types.solver_status import SolverStatus

ZERO_ROW_TOL = 1e-12
RANK_TOL = 1e-10
CONSISTENCY_TOL = 1e-8


@dataclass
class PresolveRecord:
    """
    A presolved problem together with everything needed to map its solution
    back onto the original problem.
    """

    original: SdpProblem
    problem: SdpProblem
    kept_rows: np.ndarray
    row_scale: np.ndarray
    block_scale: np.ndarray
    col_scale: np.ndarray
    objective_scale: float
    rank: int
    infeasible: bool = False
    message: str = ""

    def recover(self, solution: SdpSolution) -> SdpSolution:
        phi = self.objective_scale
        duals = np.zeros(self.original.n_eq)
        duals[self.kept_rows] = phi * self.row_scale * solution.eq_duals
        matrices = [
            phi * X / w for X, w in zip(solution.dual_matrices, self.block_scale)
        ]
        z = self.col_scale * solution.z_star
        direction = solution.certificate_direction
        if direction is not None and solution.status == SolverStatus.UNBOUNDED:
            direction = self.col_scale * direction
            direction = direction / np.linalg.norm(direction)
        return replace(
            solution,
            z_star=z,
            certificate_direction=direction,
            objective_value=self.original.objective_value(z),
            dual_objective=phi * solution.dual_objective
            + self.original.objective_constant,
            dual_matrices=matrices,
            eq_duals=duals,
        )


def _independent_rows(A: np.ndarray) -> np.ndarray:
    if A.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    _, R, piv = scipy.linalg.qr(A.T, mode="economic", pivoting=True)
    diag = np.abs(np.diag(R))
    if diag.size == 0 or diag[0] == 0.0:
        return np.zeros(0, dtype=np.int64)
    rank = int(np.sum(diag > RANK_TOL * diag[0]))
    return np.sort(piv[:rank])


def presolve(prob: SdpProblem) -> PresolveRecord:
    """
    Clean up the equality rows and scale the data:

    - all-zero rows are dropped, or flagged infeasible when their right-hand
      side is not zero
    - every row is scaled to unit max-norm and exact duplicates are dropped
    - linearly dependent rows are dropped after checking their consistency
    - every block is scaled to unit max-entry, then every variable to unit
      max-coefficient and the objective to unit max-norm
    """
    A = prob.eq_matrix
    b = prob.eq_rhs
    assert A is not None and b is not None

    def rejected(msg: str) -> PresolveRecord:
        Logger.print_debug(f"presolve: {msg}")
        return PresolveRecord(
            original=prob,
            problem=prob,
            kept_rows=np.arange(prob.n_eq),
            row_scale=np.ones(prob.n_eq),
            block_scale=np.ones(len(prob.blocks)),
            col_scale=np.ones(prob.nfree),
            objective_scale=1.0,
            rank=0,
            infeasible=True,
            message=msg,
        )

    # zero rows
    row_norm = np.abs(A).max(axis=1) if A.shape[0] else np.zeros(0)
    rhs_scale = 1.0 + (np.abs(b).max() if b.size else 0.0)
    zero = row_norm <= ZERO_ROW_TOL
    bad = np.flatnonzero(zero & (np.abs(b) > ZERO_ROW_TOL * rhs_scale))
    if bad.size:
        return rejected(f"equality row {prob.eq_labels[bad[0]]} reads 0 = {b[bad[0]]:g}")
    rows = np.flatnonzero(~zero)

    # unit max-norm and exact duplicates
    scale = 1.0 / row_norm[rows]
    A_s = A[rows] * scale[:, None]
    b_s = b[rows] * scale
    _, first = np.unique(A_s, axis=0, return_index=True)
    keep = np.sort(first)
    for r in range(rows.size):
        match = np.flatnonzero(np.all(A_s[keep] == A_s[r], axis=1))
        if match.size and b_s[keep[match[0]]] != b_s[r]:
            if abs(b_s[keep[match[0]]] - b_s[r]) > CONSISTENCY_TOL * rhs_scale:
                return rejected(
                    f"duplicate equality rows {prob.eq_labels[rows[r]]} disagree"
                )
    rows, scale, A_s, b_s = rows[keep], scale[keep], A_s[keep], b_s[keep]

    # linear dependence
    independent = _independent_rows(A_s)
    dependent = np.setdiff1d(np.arange(rows.size), independent)
    if dependent.size:
        coeffs, *_ = scipy.linalg.lstsq(A_s[independent].T, A_s[dependent].T)
        mismatch = np.abs(coeffs.T @ b_s[independent] - b_s[dependent])
        if mismatch.size and mismatch.max() > CONSISTENCY_TOL * rhs_scale:
            worst = rows[dependent[int(np.argmax(mismatch))]]
            return rejected(f"dependent equality row {prob.eq_labels[worst]} is inconsistent")
    rows, scale = rows[independent], scale[independent]
    A_s, b_s = A_s[independent], b_s[independent]

    # block and objective scaling
    blocks = []
    block_scale = np.ones(len(prob.blocks))
    for j, block in enumerate(prob.blocks):
        peak = max(
            float(np.abs(block.constant).max()),
            float(np.abs(block.coeffs).max()) if block.coeffs.size else 0.0,
        )
        w = peak if peak > 0 else 1.0
        block_scale[j] = w
        blocks.append(
            LmiBlock(
                size=block.size,
                constant=block.constant / w,
                var_index=block.var_index,
                coeffs=block.coeffs / w,
                label=block.label,
            )
        )
    # every variable to unit max-coefficient, then the rows back to unit max-norm
    col_peak = np.abs(A_s).max(axis=0) if A_s.shape[0] else np.zeros(prob.nfree)
    for block in blocks:
        if block.var_index.size:
            np.maximum.at(col_peak, block.var_index, np.abs(block.coeffs).max(axis=(1, 2)))
    col_scale = np.ones(prob.nfree)
    used = col_peak > 0
    col_scale[used] = 1.0 / col_peak[used]
    for block in blocks:
        block.coeffs = block.coeffs * col_scale[block.var_index][:, None, None]
    if A_s.shape[0]:
        A_s = A_s * col_scale
        again = 1.0 / np.abs(A_s).max(axis=1)
        A_s, b_s, scale = A_s * again[:, None], b_s * again, scale * again

    objective = prob.objective * col_scale
    f_peak = float(np.abs(objective).max()) if prob.nfree else 0.0
    phi = f_peak if f_peak > 0 else 1.0

    reduced = SdpProblem(
        nfree=prob.nfree,
        objective=objective / phi,
        blocks=blocks,
        eq_matrix=A_s,
        eq_rhs=b_s,
        objective_constant=0.0,
        maximize=prob.maximize,
        eq_labels=[prob.eq_labels[r] for r in rows],
        var_labels=prob.var_labels,
    )
    dropped = prob.n_eq - rows.size
    if dropped:
        Logger.print_debug(
            f"presolve: dropped {dropped} of {prob.n_eq} equality rows, rank {rows.size}"
        )
    return PresolveRecord(
        original=prob,
        problem=reduced,
        kept_rows=rows,
        row_scale=scale,
        block_scale=block_scale,
        col_scale=col_scale,
        objective_scale=phi,
        rank=int(rows.size),
    )
