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

from lsipp.components.certify.certificate import certify
from lsipp.components.certify.extraction import Atom, synthesize
from lsipp.components.certify.verification import verify_certificate
from lsipp.components.moment.moment_basis import basis
from lsipp.components.moment.moment_vector import MomentVector
from lsipp.components.polyring.poly_parser import parse_polynomial
from lsipp.components.polyring.polynomial import Polynomial
from lsipp.components.relax.lsipp_problem import LsippProblem
from lsipp.core.settings.lsipp_settings import CertifySettings

ATOMS = [
    Atom(point=np.array([0.25]), weight=0.5),
    Atom(point=np.array([0.75]), weight=1.5),
]


@pytest.fixture
def problem() -> LsippProblem:
    """a = (1, Y1) with c matching the atoms, so they form a certificate"""
    c = [
        sum(a.weight for a in ATOMS),
        sum(a.weight * a.point[0] for a in ATOMS),
    ]
    return LsippProblem(
        nvars=1,
        c=c,
        a=[Polynomial.constant(1, 1.0), Polynomial.variable(1, 0)],
        b=parse_polynomial("Y1^2", 1),
        gens=[parse_polynomial("Y1 - Y1^2", 1)],
        compact=True,
    )


def test_verification_of_matching_atoms(problem):
    z = synthesize(ATOMS, 4)
    v = verify_certificate(problem, z, ATOMS)
    assert v.verified
    assert v.c_residual < 1e-12
    assert v.value_residual < 1e-12
    assert v.value == pytest.approx(-(0.5 * 0.0625 + 1.5 * 0.5625))


def test_verification_without_atoms(problem):
    v = verify_certificate(problem, synthesize(ATOMS, 4), [])
    assert not v.verified
    assert v.c_residual == float("inf")


def test_verification_detects_wrong_weights(problem):
    wrong = [Atom(a.point, 2 * a.weight) for a in ATOMS]
    assert not verify_certificate(problem, synthesize(ATOMS, 4), wrong).verified


def test_certify_atomic_moments(problem, certify_settings):
    cert = certify(problem, synthesize(ATOMS, 6), 3, certify_settings)
    assert cert.certified, cert.reason
    assert cert.verified
    assert cert.flat_t == 2
    assert np.allclose([a.point[0] for a in cert.atoms], [0.25, 0.75], atol=1e-6)
    doc = cert.to_dict()
    assert doc["certified"] is True
    assert set(doc["ranks"]) == {"1", "2", "3"}
    assert doc["ranks"]["1"]["lower"] == 1
    assert doc["residuals"]["c"] < 1e-6


def test_certify_rejects_atoms_outside_the_index_set(problem, certify_settings):
    outside = [Atom(np.array([0.25]), 1.0), Atom(np.array([1.5]), 1.0)]
    cert = certify(problem, synthesize(outside, 6), 3, certify_settings)
    assert not cert.certified
    assert "outside the index set" in cert.reason


def test_certify_without_flat_order(problem):
    exps = basis(1, 6).exponent_array()[:, 0]
    z = MomentVector(1, 6, 1.0 / (exps + 1.0))
    cert = certify(problem, z, 3, CertifySettings(rank_tol=1e-9))
    assert not cert.certified
    assert cert.flat_t is None
    assert cert.reason == "no flat order"
