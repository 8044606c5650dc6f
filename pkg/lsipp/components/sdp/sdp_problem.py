# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List

import numpy as np

from lsipp.core.types.solver_status import SolverStatus


@dataclass
class LmiBlock:
    """
    Affine symmetric matrix map z -> B0 + sum_i z[var_index[i]] * coeffs[i]
    that is required to be positive semidefinite.
    """

    size: int
    constant: np.ndarray
    var_index: np.ndarray
    coeffs: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        self.constant = np.asarray(self.constant, dtype=float)
        self.var_index = np.asarray(self.var_index, dtype=np.int64)
        self.coeffs = np.asarray(self.coeffs, dtype=float).reshape(
            self.var_index.size, self.size, self.size
        )
        if self.size < 1:
            raise ValueError(f"Block '{self.label}' must have a positive size")
        if self.constant.shape != (self.size, self.size):
            raise ValueError(f"Block '{self.label}' has a constant of wrong shape")
        if not np.array_equal(self.constant, self.constant.T):
            raise ValueError(f"Block '{self.label}' has a nonsymmetric constant")
        if not np.array_equal(self.coeffs, self.coeffs.transpose(0, 2, 1)):
            raise ValueError(f"Block '{self.label}' has nonsymmetric coefficients")

    def linear_part(self, z: np.ndarray) -> np.ndarray:
        """sum_i z_i B_i without the constant"""
        return np.tensordot(z[self.var_index], self.coeffs, axes=1)

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        return self.constant + self.linear_part(z)

    def adjoint(self, X: np.ndarray) -> np.ndarray:
        """(<B_i, X>)_i for the variables of the block"""
        return self.coeffs.reshape(self.var_index.size, -1) @ X.ravel()

    def dense_coeffs(self, nfree: int) -> np.ndarray:
        """Coefficient matrices of all nfree variables, zero where unused"""
        out = np.zeros((nfree, self.size, self.size))
        out[self.var_index] = self.coeffs
        return out


@dataclass
class SdpProblem:
    """
    optimize  f0 + f^T z
    s.t.      B0_j + sum_i z_i B_ij  PSD   for every block j
              E z = e

    The sense is minimization unless 'maximize' is set. Duals reported by the
    solver always refer to the minimization form, i.e. to min (-f)^T z when
    maximizing:

        max  e^T y - sum_j <X_j, B0_j>
        s.t. sum_j <X_j, B_ij> + (E^T y)_i = +-f_i,   X_j PSD
    """

    nfree: int
    objective: np.ndarray
    blocks: List[LmiBlock] = field(default_factory=list)
    eq_matrix: np.ndarray | None = None
    eq_rhs: np.ndarray | None = None
    objective_constant: float = 0.0
    maximize: bool = False
    eq_labels: List[str] = field(default_factory=list)
    var_labels: List[Any] | None = None

    def __post_init__(self) -> None:
        self.objective = np.asarray(self.objective, dtype=float)
        if self.objective.shape != (self.nfree,):
            raise ValueError("Objective length differs from the number of variables")
        if self.eq_matrix is None:
            self.eq_matrix = np.zeros((0, self.nfree))
        if self.eq_rhs is None:
            self.eq_rhs = np.zeros(0)
        self.eq_matrix = np.asarray(self.eq_matrix, dtype=float).reshape(-1, self.nfree)
        self.eq_rhs = np.asarray(self.eq_rhs, dtype=float)
        if self.eq_rhs.shape != (self.eq_matrix.shape[0],):
            raise ValueError("Equality right-hand side does not match its rows")
        if not self.blocks and self.eq_matrix.shape[0] == 0:
            raise ValueError("An SDP needs at least one block or one equality")
        for block in self.blocks:
            if block.var_index.size and block.var_index.max() >= self.nfree:
                raise ValueError(f"Block '{block.label}' refers to unknown variables")
        if len(self.eq_labels) < self.n_eq:
            self.eq_labels = list(self.eq_labels) + [
                f"eq{i}" for i in range(len(self.eq_labels), self.n_eq)
            ]

    @property
    def n_eq(self) -> int:
        return int(self.eq_matrix.shape[0])  # type: ignore[union-attr]

    @property
    def block_sizes(self) -> List[int]:
        return [b.size for b in self.blocks]

    @property
    def sense_sign(self) -> float:
        """Sign turning the objective into a minimization"""
        return -1.0 if self.maximize else 1.0

    def objective_value(self, z: np.ndarray) -> float:
        return float(self.objective_constant + self.objective @ z)

    def eq_residual(self, z: np.ndarray) -> np.ndarray:
        return self.eq_matrix @ z - self.eq_rhs  # type: ignore[operator]

    def block_values(self, z: np.ndarray) -> List[np.ndarray]:
        return [b.evaluate(z) for b in self.blocks]

    def min_eigenvalues(self, z: np.ndarray) -> List[float]:
        return [float(np.linalg.eigvalsh(m).min()) for m in self.block_values(z)]


@dataclass
class Residuals:
    primal_feas: float
    dual_feas: float
    gap: float

    def within(self, tol: float) -> bool:
        return max(self.primal_feas, self.dual_feas, self.gap) <= tol


@dataclass
class SdpSolution:
    status: SolverStatus
    z_star: np.ndarray
    objective_value: float
    dual_objective: float
    dual_matrices: List[np.ndarray]
    eq_duals: np.ndarray
    residuals: Residuals
    iterations: int = 0
    history: List[float] = field(default_factory=list)
    certificate_direction: np.ndarray | None = None
    message: str = ""

    @property
    def is_optimal(self) -> bool:
        return self.status == SolverStatus.OPTIMAL

    def is_usable(self, inaccurate_tol: float) -> bool:
        """Optimal, or stopped early with every residual below 'inaccurate_tol'"""
        if self.is_optimal:
            return True
        if self.status in (SolverStatus.INFEASIBLE, SolverStatus.UNBOUNDED):
            return False
        return bool(np.all(np.isfinite(self.z_star))) and self.residuals.within(
            inaccurate_tol
        )


def failed_solution(
    prob: SdpProblem, status: SolverStatus, message: str
) -> SdpSolution:
    """Solution placeholder for problems rejected before any iteration"""
    return SdpSolution(
        status=status,
        z_star=np.full(prob.nfree, np.nan),
        objective_value=float("nan"),
        dual_objective=float("nan"),
        dual_matrices=[np.full((b.size, b.size), np.nan) for b in prob.blocks],
        eq_duals=np.full(prob.n_eq, np.nan),
        residuals=Residuals(float("inf"), float("inf"), float("inf")),
        message=message,
    )
