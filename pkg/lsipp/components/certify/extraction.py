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
from typing import Any, Dict, List

import numpy as np
import scipy.linalg

from lsipp.components.certify.rank_utils import numeric_rank
from lsipp.components.moment.localizer import moment_matrix
from lsipp.components.moment.moment_basis import basis
from lsipp.components.moment.moment_vector import MomentVector, zeta_vector
from lsipp.components.polyring.exponents import add_exponents, unit_exponent
from lsipp.core.errors import ExtractionError

MAX_CONDITION = 1e12
REAL_SCHUR_TOL = 1e-6


@dataclass(frozen=True)
class Atom:
    point: np.ndarray
    weight: float

    def to_dict(self) -> Dict[str, Any]:
        return {"point": [float(v) for v in self.point], "weight": float(self.weight)}


def synthesize(atoms: List[Atom], order: int) -> MomentVector:
    """Moments sum_i weight_i * zeta(point_i) up to 'order'"""
    out = zeta_vector(atoms[0].point, order) * atoms[0].weight
    for atom in atoms[1:]:
        out = out + zeta_vector(atom.point, order) * atom.weight
    return out


def reconstruction_residual(z: MomentVector, atoms: List[Atom], order: int) -> float:
    """||z - sum lambda zeta||_inf over the moments up to 'order', relative to max(1, ||z||_inf)"""
    target = z.truncate(order).values
    diff = target - synthesize(atoms, order).values
    return float(np.abs(diff).max()) / max(1.0, float(np.abs(target).max()))


def _multiplication_matrices(
    U: np.ndarray, chosen: np.ndarray, nvars: int, t: int
) -> List[np.ndarray]:
    row_basis = basis(nvars, t)
    monomials = [row_basis[int(i)] for i in chosen]
    return [
        np.vstack(
            [U[row_basis.index(add_exponents(mon, unit_exponent(nvars, i)))] for mon in monomials]
        )
        for i in range(nvars)
    ]


def extract_atoms(
    z: MomentVector,
    t: int,
    rank_tol: float,
    d_S: int = 1,
    seed: int = 0,
    reconstruction_tol: float = 1e-5,
) -> List[Atom]:
    """
    Recover the atoms of a flat moment matrix M_t(z):

    1. factor M_t = V V^T with r = rank M_t columns
    2. pick r well conditioned rows of V among the monomials of degree at
       most t - d_S and reduce V to U with the identity on those rows
    3. read the multiplication matrices N_i off the rows beta + e_i of U
    4. diagonalize a random convex combination of the N_i by a real Schur
       decomposition, the coordinates are q_j^T N_i q_j
    5. fit the weights by least squares against the moments up to 2t

    The atoms are sorted lexicographically by their coordinates.
    """
    n = z.nvars
    if t - d_S < 0:
        raise ExtractionError(f"order {t} is below the generator half degree {d_S}")
    M = moment_matrix(z, t)
    r = numeric_rank(M, rank_tol)
    if r == 0:
        raise ExtractionError("moment matrix is numerically zero")

    left, sigma, _ = scipy.linalg.svd(M)
    V = left[:, :r] * np.sqrt(sigma[:r])

    n_low = len(basis(n, t - d_S))
    if n_low < r:
        raise ExtractionError(f"rank {r} exceeds the {n_low} monomials of degree {t - d_S}")
    _, R, piv = scipy.linalg.qr(V[:n_low].T, mode="economic", pivoting=True)
    if abs(R[r - 1, r - 1]) <= 1e-10 * max(1.0, abs(R[0, 0])):
        raise ExtractionError("low degree rows do not span the column space")
    chosen = np.sort(piv[:r])
    W = V[chosen]
    if np.linalg.cond(W) > MAX_CONDITION:
        raise ExtractionError("ill-conditioned monomial basis")
    U = scipy.linalg.solve(W.T, V.T).T

    mult = _multiplication_matrices(U, chosen, n, t)
    rng = np.random.default_rng(seed)
    rho = rng.random(n)
    rho /= rho.sum()
    combined = sum(w * N for w, N in zip(rho, mult))
    T, Q = scipy.linalg.schur(combined, output="real")
    if r > 1:
        sub = np.abs(np.diag(T, -1))
        if sub.max() > REAL_SCHUR_TOL * max(1.0, float(np.abs(T).max())):
            raise ExtractionError("multiplication matrices have complex eigenvalues")

    points = np.array([[Q[:, j] @ N @ Q[:, j] for N in mult] for j in range(r)])
    points = points[np.lexsort(points.T[::-1])]

    A = np.column_stack([zeta_vector(v, 2 * t).values for v in points])
    target = z.truncate(2 * t).values
    weights, *_ = scipy.linalg.lstsq(A, target)
    if np.any(weights <= 0):
        raise ExtractionError(f"nonpositive weight {float(weights.min()):.3g}")

    atoms = [Atom(point=v, weight=float(w)) for v, w in zip(points, weights)]
    residual = reconstruction_residual(z, atoms, 2 * t)
    if residual > reconstruction_tol:
        raise ExtractionError(
            f"moment reconstruction residual {residual:.3g} exceeds {reconstruction_tol:g}"
        )
    return atoms
