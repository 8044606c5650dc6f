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

from lsipp.components.moment.moment_basis import basis
from lsipp.components.moment.moment_vector import zeta_vector
from lsipp.components.popt.popt_problem import PoptProblem, to_lsipp
from lsipp.components.relax.lsipp_problem import homogenize_problem
from lsipp.components.relax.relaxations import (
    build_moment,
    build_moment_h,
    build_sos,
    build_sos_h,
)
from lsipp.components.sdp.solver import solve
from tests.utils import golden


def test_moment_relaxation_layout(bifolium):
    sdp = build_moment(bifolium.problem, 2)
    assert sdp.maximize
    assert sdp.nfree == len(basis(2, 4))
    assert sdp.block_sizes == [6, 1]
    assert [b.label for b in sdp.blocks] == ["M2", "M0(g1)"]
    assert sdp.eq_labels == ["a1", "a2"]
    assert np.array_equal(sdp.eq_rhs, bifolium.problem.c)
    assert sdp.var_labels[0] == (0, 0)


def test_moment_objective_is_minus_riesz_of_b(bifolium):
    sdp = build_moment(bifolium.problem, 2)
    v = np.array([0.3, 0.7])
    z = zeta_vector(v, 4).values
    assert sdp.objective_value(z) == pytest.approx(-bifolium.problem.b.evaluate(v))


def test_dirac_at_a_feasible_point_satisfies_the_blocks(bifolium):
    # (1, 1) lies in S: (1 + 5) * 1 - 4 >= 0
    sdp = build_moment(bifolium.problem, 3)
    z = zeta_vector([1.0, 1.0], 6).values
    assert min(sdp.min_eigenvalues(z)) > -1e-9


def test_homogenized_moment_layout(cusp):
    h = homogenize_problem(cusp.problem)
    sdp = build_moment_h(h, 2)
    # M_k plus g1^h, g2^h and Y0
    assert len(sdp.blocks) == 4
    assert sdp.n_eq == h.m + len(basis(3, 2))
    assert all(label.startswith("sphere") for label in sdp.eq_labels[h.m :])


def test_sphere_rows_vanish_on_the_sphere(cusp):
    h = homogenize_problem(cusp.problem)
    sdp = build_moment_h(h, 3)
    rng = np.random.default_rng(2)
    for _ in range(5):
        point = rng.standard_normal(3)
        point /= np.linalg.norm(point)
        z = zeta_vector(point, 6).values
        assert np.abs(sdp.eq_matrix[h.m :] @ z).max() < 1e-12


def test_sos_relaxation_layout(bifolium):
    sdp = build_sos(bifolium.problem, 2)
    assert not sdp.maximize
    assert sdp.var_labels[:2] == ["x1", "x2"]
    assert [b.label for b in sdp.blocks] == ["Z0", "Z1"]
    assert sdp.n_eq == len(basis(2, 4))
    assert np.array_equal(sdp.objective[:2], bifolium.problem.c)
    assert not np.any(sdp.objective[2:])


def test_homogenized_sos_has_free_sphere_multiplier(cusp):
    h = homogenize_problem(cusp.problem)
    sdp = build_sos_h(h, 2)
    free = [label for label in sdp.var_labels if isinstance(label, tuple) and label[0] == "h"]
    assert len(free) == len(basis(3, 2))
    assert len(sdp.blocks) == 4


WEAK_DUALITY_CASES = [
    ("interval_moments", 4, False),
    ("bifolium", 2, False),
    ("bifolium", 3, False),
    ("cusp", 3, True),
    ("hyperbolic_popt", 2, False),
]


@pytest.mark.parametrize(
    "name, k, homogenized",
    WEAK_DUALITY_CASES,
    ids=[f"{name}-k{k}" for name, k, _ in WEAK_DUALITY_CASES],
)
def test_weak_duality(name, k, homogenized):
    prob = golden(name).problem
    if isinstance(prob, PoptProblem):
        prob = to_lsipp(prob)
    if homogenized:
        hprob = homogenize_problem(prob)
        moment = solve(build_moment_h(hprob, k))
        sos = solve(build_sos_h(hprob, k))
    else:
        moment = solve(build_moment(prob, k))
        sos = solve(build_sos(prob, k))
    assert moment.is_optimal, moment.message
    assert sos.is_optimal, sos.message
    assert moment.objective_value <= sos.objective_value + 1e-6


def test_bifolium_bounds_agree_at_order_two(bifolium):
    moment = solve(build_moment(bifolium.problem, 2))
    sos = solve(build_sos(bifolium.problem, 2))
    assert moment.objective_value == pytest.approx(sos.objective_value, abs=1e-4)
