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

from lsipp.components.relax.hierarchy import best_row, run_hierarchy, solve_order
from lsipp.components.relax.lsipp_problem import homogenize_problem
from lsipp.components.relax.relaxations import build_sos
from lsipp.components.sdp.solver import solve


def assert_nonincreasing(rows, tol=1e-6):
    values = [row.value for row in rows if row.usable]
    for before, after in zip(values, values[1:]):
        assert after <= before + tol, f"value rose from {before} to {after}"


def test_interval_moments_certifies_at_order_four(interval_moments):
    rows = run_hierarchy(interval_moments.problem)
    row = rows[-1]
    assert row.k == 4
    assert row.certified, row.certificate.reason if row.certificate else row.status
    assert row.value == pytest.approx(-1.7869, abs=1e-3)
    assert best_row(rows) is row


def test_interval_moments_multipliers_are_feasible(interval_moments):
    row = solve_order(interval_moments.problem, 4)
    assert row.x_star is not None
    assert float(interval_moments.problem.c @ row.x_star) == pytest.approx(-1.7869, abs=1e-3)
    g = interval_moments.problem.constraint(row.x_star)
    grid = np.linspace(0.0, 1.0, 401)[:, None]
    assert g.evaluate_many(grid).min() > -1e-3


def test_interval_moments_sos_bound(interval_moments):
    sos = solve(build_sos(interval_moments.problem, 4))
    moment = solve_order(interval_moments.problem, 4)
    assert sos.objective_value == pytest.approx(-1.7869, abs=1e-3)
    assert moment.value <= sos.objective_value + 1e-6


def test_tangent_line_values_and_atoms(bifolium):
    rows = run_hierarchy(bifolium.problem, k_max=3)
    assert [row.k for row in rows] == [2, 3]
    assert rows[0].value == pytest.approx(1.2982, abs=2e-3)
    assert rows[1].value == pytest.approx(1.2019, abs=1e-3)
    assert rows[1].certified
    points = [atom.point for atom in rows[1].certificate.atoms]
    assert len(points) == 2
    assert np.allclose(points[0], [-0.9699, 1.0079], atol=2e-3)
    assert np.allclose(points[1], [1.4322, 1.4884], atol=2e-3)
    assert_nonincreasing(rows)


def test_tangent_line_atoms_lie_in_the_index_set(bifolium):
    row = run_hierarchy(bifolium.problem, k_min=3, k_max=3)[0]
    for atom in row.certificate.atoms:
        assert all(g.evaluate(atom.point) >= -1e-4 for g in bifolium.problem.generators)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_cusp_sos_bound_is_zero(cusp, k):
    sol = solve(build_sos(cusp.problem, k))
    assert sol.is_optimal
    assert sol.objective_value == pytest.approx(0.0, abs=1e-4)


def test_cusp_homogenized_hierarchy(cusp):
    rows = run_hierarchy(homogenize_problem(cusp.problem), k_max=3)
    assert [row.k for row in rows] == [2, 3]
    assert abs(rows[0].value) <= 1e-5
    assert not rows[0].certified
    assert rows[1].certified
    assert rows[1].value == pytest.approx(-0.75, abs=1e-3)
    atoms = rows[1].certificate.atoms
    assert len(atoms) == 1
    assert np.allclose(atoms[0].point, [0.5773, 0.5774, 0.5774], atol=2e-3)
    assert_nonincreasing(rows)


def test_homogenized_bound_does_not_undercut_the_optimum(cusp):
    rows = run_hierarchy(homogenize_problem(cusp.problem), k_max=3)
    for row in rows:
        if row.status.value == "Optimal":
            assert row.value >= -0.75 - 1e-3


def test_hierarchy_without_certification(bifolium):
    rows = run_hierarchy(bifolium.problem, k_max=3, certify_orders=False)
    assert [row.k for row in rows] == [2, 3]
    assert all(row.certificate is None for row in rows)
    assert best_row(rows) is rows[-1]


def test_best_row_of_nothing():
    assert best_row([]) is None
