# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from lsipp.components.certify.extraction import Atom
from lsipp.components.moment.moment_vector import MomentVector, riesz
from lsipp.components.relax.lsipp_problem import HomogenizedProblem, LsippProblem


@dataclass(frozen=True)
class Verification:
    """
    Residuals of c = sum lambda_i a(v_i) and p_mom = -sum lambda_i b(v_i),
    the identities that make an atomic moment solution optimal.
    """

    c_residual: float
    value_residual: float
    value: float
    verified: bool


def verify_certificate(
    prob: LsippProblem | HomogenizedProblem,
    z_star: MomentVector,
    atoms: List[Atom],
    verify_tol: float = 1e-3,
) -> Verification:
    p_mom = -riesz(z_star, prob.b)
    if not atoms:
        return Verification(float("inf"), float("inf"), p_mom, False)
    weights = np.array([atom.weight for atom in atoms])
    a_at = np.array([[p.evaluate(atom.point) for p in prob.a] for atom in atoms])
    b_at = np.array([prob.b.evaluate(atom.point) for atom in atoms])

    c_residual = float(np.abs(weights @ a_at - prob.c).max())
    value_residual = abs(p_mom + float(weights @ b_at))
    verified = c_residual <= verify_tol and value_residual <= verify_tol
    return Verification(c_residual, value_residual, p_mom, verified)
