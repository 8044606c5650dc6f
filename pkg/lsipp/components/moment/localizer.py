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
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from lsipp.components.moment.moment_basis import basis
from lsipp.components.moment.moment_vector import MomentVector
from lsipp.components.polyring.exponents import ExponentVec, add_exponents, half_degree
from lsipp.components.polyring.polynomial import Polynomial
from lsipp.core.errors import DegreeError, DimensionMismatchError


@dataclass(frozen=True)
class LocalizerStructure:
    """
    Sparse description of M_{k-d_g}(g z) as a linear map of z. Each stored
    entry belongs to the upper triangle (row <= col) and says that cell
    (row, col) receives coef * z[index]. The lower triangle is mirrored on
    assembly, so the matrices are symmetric by construction.
    """

    nvars: int
    order: int
    generator: Polynomial
    half_degree: int
    block_size: int
    rows: np.ndarray
    cols: np.ndarray
    index: np.ndarray
    coefs: np.ndarray

    def cell_terms(self, row: int, col: int) -> List[Tuple[ExponentVec, float]]:
        """The (exponent, coefficient) pairs read by one cell"""
        if row > col:
            row, col = col, row
        z_basis = basis(self.nvars, 2 * self.order)
        mask = (self.rows == row) & (self.cols == col)
        return [
            (z_basis[int(i)], float(c))
            for i, c in zip(self.index[mask], self.coefs[mask])
        ]

    def assemble(self, values: np.ndarray) -> np.ndarray:
        upper = np.zeros((self.block_size, self.block_size))
        np.add.at(upper, (self.rows, self.cols), self.coefs * values[self.index])
        return upper + np.triu(upper, 1).T

    def coefficient_stack(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        The matrices C_alpha with M(z) = sum_alpha z_alpha C_alpha, restricted
        to the exponents that actually occur.

        :return: (positions of the occurring exponents in N^n_2k, stack of
            shape (len(positions), block_size, block_size))
        """
        used, slot = np.unique(self.index, return_inverse=True)
        stack = np.zeros((used.size, self.block_size, self.block_size))
        np.add.at(stack, (slot, self.rows, self.cols), self.coefs)
        stack += np.triu(stack, 1).transpose(0, 2, 1)
        return used, stack


@lru_cache(maxsize=256)
def localizer_structure(nvars: int, k: int, g: Polynomial) -> LocalizerStructure:
    if g.nvars != nvars:
        raise DimensionMismatchError(nvars, g.nvars)
    d_g = half_degree(g.degree)
    if k < d_g:
        raise DegreeError("localizing matrix order", k, d_g)

    row_basis = basis(nvars, k - d_g)
    z_basis = basis(nvars, 2 * k)
    g_terms = g.sorted_terms()

    rows: List[int] = []
    cols: List[int] = []
    index: List[int] = []
    coefs: List[float] = []
    size = len(row_basis)
    for p in range(size):
        for q in range(p, size):
            shift = add_exponents(row_basis[p], row_basis[q])
            for gamma, coef in g_terms:
                rows.append(p)
                cols.append(q)
                index.append(z_basis.index(add_exponents(shift, gamma)))
                coefs.append(coef)

    return LocalizerStructure(
        nvars=nvars,
        order=k,
        generator=g,
        half_degree=d_g,
        block_size=size,
        rows=np.array(rows, dtype=np.int64),
        cols=np.array(cols, dtype=np.int64),
        index=np.array(index, dtype=np.int64),
        coefs=np.array(coefs, dtype=float),
    )


def _check_order(z: MomentVector, k: int) -> None:
    if z.order < 2 * k:
        raise DegreeError("moment vector order", z.order, 2 * k)


def moment_matrix(z: MomentVector, k: int) -> np.ndarray:
    """M_k(z) with entry (alpha, beta) equal to z_{alpha+beta}"""
    _check_order(z, k)
    one = Polynomial.constant(z.nvars, 1.0)
    return localizer_structure(z.nvars, k, one).assemble(z.values)


def localizing_matrix(z: MomentVector, g: Polynomial, k: int) -> np.ndarray:
    """M_{k-d_g}(g z) with cell (alpha, beta) = sum_gamma g_gamma z_{alpha+beta+gamma}"""
    _check_order(z, k)
    return localizer_structure(z.nvars, k, g).assemble(z.values)
