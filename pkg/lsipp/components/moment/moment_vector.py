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
from typing import Sequence

import numpy as np

from lsipp.components.moment.moment_basis import MomentBasis, basis
from lsipp.components.polyring.polynomial import Polynomial
from lsipp.core.errors import DegreeError, DimensionMismatchError


@dataclass
class MomentVector:
    """Truncated moment sequence z indexed by the exponents of N^n_order"""

    nvars: int
    order: int
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        expected = len(basis(self.nvars, self.order))
        if self.values.shape != (expected,):
            raise DimensionMismatchError(expected, int(self.values.size), "moment vector")

    @property
    def basis(self) -> MomentBasis:
        return basis(self.nvars, self.order)

    def __getitem__(self, exp: Sequence[int]) -> float:
        return float(self.values[self.basis.index(exp)])

    def truncate(self, order: int) -> "MomentVector":
        if order > self.order:
            raise DegreeError("moment vector truncation", order, self.order)
        size = len(basis(self.nvars, order))
        return MomentVector(self.nvars, order, self.values[:size].copy())

    def __add__(self, other: "MomentVector") -> "MomentVector":
        if (other.nvars, other.order) != (self.nvars, self.order):
            raise DimensionMismatchError(len(self.values), len(other.values), "moment vector")
        return MomentVector(self.nvars, self.order, self.values + other.values)

    def __mul__(self, scale: float) -> "MomentVector":
        return MomentVector(self.nvars, self.order, self.values * scale)

    __rmul__ = __mul__


def zeta_vector(v: Sequence[float] | np.ndarray, k2: int) -> MomentVector:
    """Moments of the Dirac measure at v up to degree k2: entry alpha is v^alpha"""
    point = np.asarray(v, dtype=float)
    exps = basis(point.size, k2).exponent_array()
    values = np.prod(np.power(point[None, :], exps), axis=1)
    return MomentVector(point.size, k2, values)


def riesz(z: MomentVector, q: Polynomial) -> float:
    """L_z(q) = sum of q_alpha z_alpha"""
    if q.nvars != z.nvars:
        raise DimensionMismatchError(z.nvars, q.nvars)
    if q.degree > z.order:
        raise DegreeError("Riesz functional argument", q.degree, z.order)
    index = z.basis.index
    return float(sum(c * z.values[index(e)] for e, c in q.sorted_terms()))
