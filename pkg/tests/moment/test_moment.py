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

from lsipp.components.moment.localizer import (
    localizer_structure,
    localizing_matrix,
    moment_matrix,
)
from lsipp.components.moment.moment_basis import basis
from lsipp.components.moment.moment_vector import MomentVector, riesz, zeta_vector
from lsipp.components.polyring.poly_parser import parse_polynomial
from lsipp.components.polyring.polynomial import Polynomial
from lsipp.core.errors import DegreeError, DimensionMismatchError


def box_moments(k2: int) -> MomentVector:
    """Moments of the uniform measure on [1, 2] x [0, 1]"""
    exps = basis(2, k2).exponent_array()
    a, b = exps[:, 0], exps[:, 1]
    values = (2.0 ** (a + 1) - 1.0) / (a + 1) / (b + 1)
    return MomentVector(2, k2, values)


def test_basis_is_prefix_of_higher_order():
    low, high = basis(2, 2), basis(2, 4)
    assert high.monomials[: len(low)] == low.monomials
    assert high.index((1, 1)) == low.index((1, 1))


def test_basis_rejects_negative_order():
    with pytest.raises(ValueError):
        basis(2, -1)


def test_moment_vector_checks_length():
    with pytest.raises(DimensionMismatchError):
        MomentVector(2, 2, np.zeros(5))


def test_truncate_and_lookup():
    z = box_moments(4)
    t = z.truncate(2)
    assert len(t.values) == 6
    assert t[(1, 0)] == pytest.approx(1.5)
    assert t[(0, 2)] == pytest.approx(1.0 / 3.0)
    with pytest.raises(DegreeError):
        t.truncate(3)


def test_zeta_moment_matrix_is_rank_one():
    v = np.array([0.3, -1.2])
    z = zeta_vector(v, 4)
    M = moment_matrix(z, 2)
    monomials = np.prod(np.power(v[None, :], basis(2, 2).exponent_array()), axis=1)
    assert np.allclose(M, np.outer(monomials, monomials))
    assert np.linalg.matrix_rank(M, tol=1e-10) == 1


def test_riesz_of_zeta_is_evaluation():
    q = parse_polynomial("3*Y1^2*Y2 - Y2^3 + 2", 2)
    v = [0.7, -0.4]
    assert riesz(zeta_vector(v, 3), q) == pytest.approx(q.evaluate(v))


def test_riesz_degree_check():
    with pytest.raises(DegreeError):
        riesz(zeta_vector([1.0], 2), parse_polynomial("Y1^3", 1))


def test_box_moment_matrix_positive_definite():
    M = moment_matrix(box_moments(6), 3)
    assert np.allclose(M, M.T)
    assert np.linalg.eigvalsh(M).min() > 0


def test_localizing_matrix_of_box_generator_is_psd():
    g = parse_polynomial("(Y1 - 1)*(2 - Y1)", 2)
    L = localizing_matrix(box_moments(6), g, 3)
    assert L.shape == (len(basis(2, 2)),) * 2
    assert np.linalg.eigvalsh(L).min() > -1e-12


def test_localizer_quadratic_form_is_riesz_of_g_q_squared():
    z = box_moments(6)
    g = parse_polynomial("Y1 - Y2^2", 2)
    rows = basis(2, 2)
    coeffs = np.random.default_rng(11).standard_normal(len(rows))
    q = Polynomial(2, {e: c for e, c in zip(rows, coeffs)})
    L = localizing_matrix(z, g, 3)
    assert coeffs @ L @ coeffs == pytest.approx(riesz(z, g * q * q))


def test_coefficient_stack_reassembles_matrix():
    z = box_moments(4)
    g = parse_polynomial("1 - Y1^2 - Y2^2", 2)
    structure = localizer_structure(2, 2, g)
    used, stack = structure.coefficient_stack()
    rebuilt = np.tensordot(z.values[used], stack, axes=1)
    assert np.allclose(rebuilt, localizing_matrix(z, g, 2))


def test_cell_terms_of_moment_matrix():
    structure = localizer_structure(1, 2, Polynomial.constant(1, 1.0))
    assert structure.cell_terms(2, 1) == [((3,), 1.0)]


def test_localizer_order_too_low():
    with pytest.raises(DegreeError):
        localizer_structure(1, 1, parse_polynomial("Y1^4", 1))
