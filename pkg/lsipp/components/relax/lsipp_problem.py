# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np

from lsipp.components.polyring.exponents import half_degree
from lsipp.components.polyring.polynomial import Polynomial
from lsipp.core.errors import DegreeError, DimensionMismatchError, ProblemDataError


@dataclass
class LsippProblem:
    """
    inf c^T x  s.t.  a(y)^T x + b(y) >= 0  for all y in S = {g_j >= 0}

    'ball' appends the redundant generator ball - ||Y||^2 to the index set.
    """

    nvars: int
    c: np.ndarray
    a: List[Polynomial]
    b: Polynomial
    gens: List[Polynomial] = field(default_factory=list)
    compact: bool = False
    ball: float | None = None
    name: str = ""

    def __post_init__(self) -> None:
        self.c = np.asarray(self.c, dtype=float).reshape(-1)
        self.a = list(self.a)
        self.gens = list(self.gens)
        if not self.a:
            raise ProblemDataError("at least one decision variable is required")
        if self.c.size != len(self.a):
            raise ProblemDataError(
                f"c has {self.c.size} entries but a has {len(self.a)} polynomials"
            )
        for p in [*self.a, self.b, *self.gens]:
            if p.nvars != self.nvars:
                raise DimensionMismatchError(self.nvars, p.nvars)
        if self.ball is not None and self.ball <= 0:
            raise ProblemDataError(f"ball radius squared must be positive, got {self.ball}")

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def ball_generator(self) -> Polynomial | None:
        if self.ball is None:
            return None
        return Polynomial.constant(self.nvars, self.ball) - Polynomial.squared_norm(self.nvars)

    @property
    def generators(self) -> List[Polynomial]:
        """The generators of S, with the ball appended once when requested"""
        ball = self.ball_generator
        if ball is None or ball in self.gens:
            return list(self.gens)
        return [*self.gens, ball]

    def constraint(self, x: Sequence[float]) -> Polynomial:
        """a(Y)^T x + b(Y)"""
        out = self.b
        for xi, ai in zip(x, self.a):
            out = out + ai * float(xi)
        return out

    def in_index_set(self, y: Sequence[float], tol: float = 0.0) -> bool:
        return all(g.evaluate(y) >= -tol for g in self.generators)


@dataclass(frozen=True)
class RelaxationOrder:
    k: int
    d_j: tuple
    d_S: int
    d_P: int

    @classmethod
    def of(cls, prob: "LsippProblem | HomogenizedProblem", k: int | None = None) -> "RelaxationOrder":
        """Degree bookkeeping of a problem; k defaults to d_P"""
        d_j = tuple(half_degree(g.degree) for g in prob.generators)
        d_S = max([1, *d_j])
        d_P = max([d_S, half_degree(prob.b.degree), *(half_degree(p.degree) for p in prob.a)])
        if k is None:
            k = d_P
        if k < d_P:
            raise DegreeError("relaxation order", k, d_P)
        return cls(k=k, d_j=d_j, d_S=d_S, d_P=d_P)


@dataclass
class HomogenizedProblem:
    """
    The problem lifted to Ỹ = (Y0, Y) on the unit sphere. 'gens_h' is
    {g_1^h, ..., g_s^h, Y0, ||Ỹ||^2 - 1, 1 - ||Ỹ||^2}; the last two form the
    sphere equality and never enter a relaxation as PSD blocks.
    """

    base: LsippProblem
    omega: int
    a_h: List[Polynomial]
    b_h: Polynomial
    gens_h: List[Polynomial]

    @property
    def nvars(self) -> int:
        return self.base.nvars + 1

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def c(self) -> np.ndarray:
        return self.base.c

    @property
    def a(self) -> List[Polynomial]:
        return self.a_h

    @property
    def b(self) -> Polynomial:
        return self.b_h

    @property
    def generators(self) -> List[Polynomial]:
        return self.gens_h

    @property
    def psd_generators(self) -> List[Polynomial]:
        """g_1^h, ..., g_s^h and Y0"""
        return self.gens_h[:-2]

    @property
    def sphere(self) -> Polynomial:
        """||Ỹ||^2 - 1"""
        return self.gens_h[-2]

    @property
    def name(self) -> str:
        return self.base.name

    def in_index_set(self, y: Sequence[float], tol: float = 0.0) -> bool:
        return all(g.evaluate(y) >= -tol for g in self.gens_h)


def homogenize_problem(prob: LsippProblem) -> HomogenizedProblem:
    if prob.b.is_zero and all(p.is_zero for p in prob.a):
        raise ProblemDataError("all of a and b are zero, nothing to homogenize")
    omega = max([prob.b.degree, *(p.degree for p in prob.a)])
    n1 = prob.nvars + 1
    sphere = Polynomial.squared_norm(n1) - 1.0
    gens_h = [g.homogenize(g.degree) for g in prob.generators if not g.is_zero]
    gens_h += [Polynomial.variable(n1, 0), sphere, -sphere]
    return HomogenizedProblem(
        base=prob,
        omega=omega,
        a_h=[p.homogenize(omega) for p in prob.a],
        b_h=prob.b.homogenize(omega),
        gens_h=gens_h,
    )
