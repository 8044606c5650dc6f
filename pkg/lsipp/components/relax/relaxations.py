# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from typing import Any, List, Sequence, Tuple

import numpy as np

from lsipp.components.moment.localizer import LocalizerStructure, localizer_structure
from lsipp.components.moment.moment_basis import basis
from lsipp.components.polyring.exponents import add_exponents, unit_exponent
from lsipp.components.polyring.polynomial import Polynomial
from lsipp.components.relax.lsipp_problem import (
    HomogenizedProblem,
    LsippProblem,
    RelaxationOrder,
)
from lsipp.components.sdp.sdp_problem import LmiBlock, SdpProblem
from lsipp.core.logger import Logger

# Moment side: free z indexed by N^n_2k, maximize -L_z(b) s.t. L_z(a_i) = c_i
# and the moment/localizing matrices PSD. SOS side: free x and the upper
# triangles of Z_j with a^T x + b = sum_j <Z_j, C_j,alpha> for every alpha.
# Block j of either side belongs to generator j, block 0 to g_0 = 1.


def _coefficients(p: Polynomial, nvars: int, k2: int) -> np.ndarray:
    z_basis = basis(nvars, k2)
    out = np.zeros(len(z_basis))
    for exp, coef in p.sorted_terms():
        out[z_basis.index(exp)] = coef
    return out


def _structures(nvars: int, k: int, gens: Sequence[Polynomial]) -> List[LocalizerStructure]:
    one = Polynomial.constant(nvars, 1.0)
    return [localizer_structure(nvars, k, g) for g in [one, *gens]]


def _block_label(j: int, k: int, d_j: int) -> str:
    return f"M{k}" if j == 0 else f"M{k - d_j}(g{j})"


def _moment_blocks(nvars: int, k: int, gens: Sequence[Polynomial]) -> List[LmiBlock]:
    blocks = []
    for j, structure in enumerate(_structures(nvars, k, gens)):
        used, stack = structure.coefficient_stack()
        blocks.append(
            LmiBlock(
                size=structure.block_size,
                constant=np.zeros((structure.block_size, structure.block_size)),
                var_index=used,
                coeffs=stack,
                label=_block_label(j, k, structure.half_degree),
            )
        )
    return blocks


def _objective_rows(
    prob: LsippProblem | HomogenizedProblem, k: int
) -> Tuple[np.ndarray, np.ndarray, List[str]]:
    n = prob.nvars
    rows = np.vstack([_coefficients(p, n, 2 * k) for p in prob.a])
    labels = [f"a{i + 1}" for i in range(prob.m)]
    return _coefficients(prob.b, n, 2 * k), rows, labels


def _sphere_rows(nvars: int, k: int) -> Tuple[np.ndarray, List[str]]:
    """One row L_z((||Y||^2 - 1) Y^gamma) = 0 per gamma in N^nvars_{2k-2}"""
    z_basis = basis(nvars, 2 * k)
    shifts = basis(nvars, 2 * k - 2)
    rows = np.zeros((len(shifts), len(z_basis)))
    for r, gamma in enumerate(shifts):
        rows[r, z_basis.index(gamma)] -= 1.0
        for i in range(nvars):
            rows[r, z_basis.index(add_exponents(gamma, unit_exponent(nvars, i, 2)))] += 1.0
    return rows, [f"sphere{gamma}" for gamma in shifts]


def build_moment(prob: LsippProblem, k: int) -> SdpProblem:
    RelaxationOrder.of(prob, k)
    n = prob.nvars
    b_vec, rows, labels = _objective_rows(prob, k)
    z_basis = basis(n, 2 * k)
    return SdpProblem(
        nfree=len(z_basis),
        objective=-b_vec,
        blocks=_moment_blocks(n, k, prob.generators),
        eq_matrix=rows,
        eq_rhs=prob.c.copy(),
        maximize=True,
        eq_labels=labels,
        var_labels=list(z_basis),
    )


def build_moment_h(hprob: HomogenizedProblem, k: int) -> SdpProblem:
    """
    Moment relaxation of the homogenized problem: the PSD blocks are M_k(z),
    M_{k-d_j}(g_j^h z) and M_{k-1}(Y0 z); M_{k-1}((||Ỹ||^2 - 1) z) = 0 is
    imposed as one equality row per distinct moment index.
    """
    RelaxationOrder.of(hprob, k)
    n = hprob.nvars
    b_vec, rows, labels = _objective_rows(hprob, k)
    sphere_rows, sphere_labels = _sphere_rows(n, k)
    z_basis = basis(n, 2 * k)
    return SdpProblem(
        nfree=len(z_basis),
        objective=-b_vec,
        blocks=_moment_blocks(n, k, hprob.psd_generators),
        eq_matrix=np.vstack([rows, sphere_rows]),
        eq_rhs=np.concatenate([hprob.c, np.zeros(len(sphere_labels))]),
        maximize=True,
        eq_labels=labels + sphere_labels,
        var_labels=list(z_basis),
    )


def _gram_blocks(
    structures: Sequence[LocalizerStructure], offset: int
) -> Tuple[List[LmiBlock], List[np.ndarray], List[Any], int]:
    """
    One PSD block per Gram matrix Z_j whose free variables are its upper
    triangle, plus the columns -<Z_j, C_j,alpha> of the coefficient rows.
    """
    blocks: List[LmiBlock] = []
    columns: List[np.ndarray] = []
    var_labels: List[Any] = []
    for j, structure in enumerate(structures):
        s = structure.block_size
        rows, cols = np.triu_indices(s)
        n_entries = rows.size
        slot = {(int(p), int(q)): t for t, (p, q) in enumerate(zip(rows, cols))}

        coeffs = np.zeros((n_entries, s, s))
        coeffs[np.arange(n_entries), rows, cols] = 1.0
        coeffs[np.arange(n_entries), cols, rows] = 1.0
        blocks.append(
            LmiBlock(
                size=s,
                constant=np.zeros((s, s)),
                var_index=np.arange(offset, offset + n_entries),
                coeffs=coeffs,
                label=f"Z{j}",
            )
        )

        n_alpha = len(basis(structure.nvars, 2 * structure.order))
        col = np.zeros((n_alpha, n_entries))
        entry = np.array(
            [slot[(int(p), int(q))] for p, q in zip(structure.rows, structure.cols)],
            dtype=np.int64,
        )
        # off-diagonal cells count twice in <Z, C>
        weight = np.where(structure.rows == structure.cols, 1.0, 2.0)
        np.add.at(col, (structure.index, entry), -weight * structure.coefs)
        columns.append(col)
        var_labels.extend((f"Z{j}", int(p), int(q)) for p, q in zip(rows, cols))
        offset += n_entries
    return blocks, columns, var_labels, offset


def _assemble_sos(
    prob: LsippProblem | HomogenizedProblem,
    k: int,
    gens: Sequence[Polynomial],
    free_multiplier: Polynomial | None = None,
) -> SdpProblem:
    n = prob.nvars
    m = prob.m
    b_vec, a_rows, _ = _objective_rows(prob, k)
    z_basis = basis(n, 2 * k)

    blocks, columns, gram_labels, nfree = _gram_blocks(_structures(n, k, gens), m)
    columns.insert(0, a_rows.T)
    var_labels: List[Any] = [f"x{i + 1}" for i in range(m)] + gram_labels

    if free_multiplier is not None:
        # h * free_multiplier with h of degree 2k - deg(free_multiplier)
        shifts = basis(n, 2 * k - free_multiplier.degree)
        col = np.zeros((len(z_basis), len(shifts)))
        for t, gamma in enumerate(shifts):
            for exp, coef in free_multiplier.sorted_terms():
                col[z_basis.index(add_exponents(gamma, exp)), t] -= coef
        columns.append(col)
        var_labels.extend(("h", gamma) for gamma in shifts)
        nfree += len(shifts)

    objective = np.zeros(nfree)
    objective[:m] = prob.c
    return SdpProblem(
        nfree=nfree,
        objective=objective,
        blocks=blocks,
        eq_matrix=np.hstack(columns),
        eq_rhs=-b_vec,
        eq_labels=[f"coef{alpha}" for alpha in z_basis],
        var_labels=var_labels,
    )


def build_sos(prob: LsippProblem, k: int) -> SdpProblem:
    """
    SOS relaxation min c^T x s.t. a^T x + b in Q_k(G), in LMI form. The
    first m free variables are x.
    """
    RelaxationOrder.of(prob, k)
    if not prob.compact:
        Logger.print_debug(
            "building the SOS relaxation of a problem not marked compact,"
            " the hierarchy need not converge"
        )
    return _assemble_sos(prob, k, prob.generators)


def build_sos_h(hprob: HomogenizedProblem, k: int) -> SdpProblem:
    """
    SOS relaxation of the homogenized problem: g_j^h and Y0 carry SOS
    multipliers, the sphere a free multiplier of degree 2k - 2.
    """
    RelaxationOrder.of(hprob, k)
    return _assemble_sos(hprob, k, hprob.psd_generators, free_multiplier=hprob.sphere)
