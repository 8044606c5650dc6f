# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
import numpy as np
import pytest

from lsipp.components.sdp.presolve import presolve
from lsipp.components.sdp.sdp_problem import LmiBlock, SdpProblem
from lsipp.components.sdp.solver import solve
from lsipp.core.types.solver_status import SolverStatus


def nonneg_pair(eq_matrix, eq_rhs) -> SdpProblem:
    """min 3 z1 + z2  s.t.  z1, z2 >= 0 and the given equality rows"""
    block = LmiBlock(
        size=2,
        constant=np.zeros((2, 2)),
        var_index=[0, 1],
        coeffs=[np.diag([1.0, 0.0]), np.diag([0.0, 1.0])],
    )
    return SdpProblem(
        nfree=2,
        objective=[3.0, 1.0],
        blocks=[block],
        eq_matrix=eq_matrix,
        eq_rhs=eq_rhs,
    )


def test_duplicate_rows_are_dropped():
    prob = nonneg_pair([[1.0, 1.0], [2.0, 2.0], [0.0, 0.0]], [1.0, 2.0, 0.0])
    record = presolve(prob)
    assert not record.infeasible
    assert record.problem.n_eq == 1
    assert record.rank == 1


def test_dependent_rows_are_dropped():
    prob = nonneg_pair([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]], [0.25, 0.75, 1.0])
    record = presolve(prob)
    assert not record.infeasible
    assert record.rank == 2


def test_zero_row_with_nonzero_rhs_is_infeasible():
    prob = nonneg_pair([[1.0, 1.0], [0.0, 0.0]], [1.0, 1.0])
    record = presolve(prob)
    assert record.infeasible
    sol = solve(prob)
    assert sol.status == SolverStatus.INFEASIBLE
    assert np.all(np.isnan(sol.z_star))


def test_inconsistent_duplicates_are_infeasible():
    record = presolve(nonneg_pair([[1.0, 1.0], [2.0, 2.0]], [1.0, 3.0]))
    assert record.infeasible
    assert "disagree" in record.message


def test_inconsistent_dependent_rows_are_infeasible():
    prob = nonneg_pair([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]], [0.25, 0.75, 2.0])
    assert presolve(prob).infeasible


def test_solution_refers_to_original_rows():
    prob = nonneg_pair([[1.0, 1.0], [2.0, 2.0]], [1.0, 2.0])
    sol = solve(prob)
    assert sol.is_optimal, sol.message
    assert sol.objective_value == pytest.approx(1.0, abs=1e-6)
    assert np.allclose(sol.z_star, [0.0, 1.0], atol=1e-5)
    assert sol.eq_duals.shape == (2,)
    # duals of the dropped row are reported as zero
    assert sol.eq_duals[1] == 0.0
    assert sol.eq_duals[0] == pytest.approx(1.0, abs=1e-5)


def test_scaling_does_not_change_the_optimum():
    prob = nonneg_pair([[1e3, 1e3]], [1e3])
    prob.objective = prob.objective * 1e4
    sol = solve(prob)
    assert sol.is_optimal, sol.message
    assert sol.objective_value == pytest.approx(1e4, rel=1e-6)
