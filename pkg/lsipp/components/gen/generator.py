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
from typing import List, Tuple

import numpy as np

from lsipp.components.moment.moment_basis import basis
from lsipp.components.polyring.polynomial import Polynomial
from lsipp.components.relax.lsipp_problem import LsippProblem
from lsipp.core.errors import GeneratorError
from lsipp.core.logger import Logger

BOX = 2


@dataclass(frozen=True)
class GenSpec:
    m: int
    n: int
    t: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 2:
            raise GeneratorError(f"m must be at least 2, got {self.m}")
        if self.n < 1 or self.t < 1:
            raise GeneratorError(f"n and t must be positive, got n={self.n}, t={self.t}")

    @property
    def name(self) -> str:
        return f"gen-m{self.m}-n{self.n}-t{self.t}-s{self.seed}"


@dataclass
class GeneratedInstance:
    spec: GenSpec
    problem: LsippProblem
    points: np.ndarray


def _streams(seed: int) -> List[np.random.Generator]:
    """Independent PCG64 streams for points, pivot indices, N and c"""
    children = np.random.SeedSequence(seed).spawn(4)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


def _sample_points(rng: np.random.Generator, m: int, n: int, attempts: int) -> np.ndarray:
    points: List[Tuple[int, ...]] = []
    for _ in range(attempts):
        candidate = tuple(int(v) for v in rng.integers(-BOX, BOX + 1, size=n))
        if candidate not in points:
            points.append(candidate)
            if len(points) == m:
                return np.array(points, dtype=float)
    raise GeneratorError(f"found only {len(points)} of {m} distinct points in {attempts} attempts")


def lagrange_interpolant(points: np.ndarray, i: int, rng: np.random.Generator) -> Polynomial:
    """
    prod_{j != i} (Y_k - v_j[k]) / (v_i[k] - v_j[k]) with k drawn among the
    coordinates where v_i and v_j differ; 1 at v_i and 0 at every other v_j.
    """
    n = points.shape[1]
    out = Polynomial.constant(n, 1.0)
    for j in range(points.shape[0]):
        if j == i:
            continue
        differ = np.flatnonzero(points[i] != points[j])
        k = int(rng.choice(differ))
        factor = (Polynomial.variable(n, k) - points[j, k]) * (1.0 / (points[i, k] - points[j, k]))
        out = out * factor
    return out


def _sum_of_squares(N: np.ndarray, n: int, t: int) -> Polynomial:
    """(N m_t)^T (N m_t) + 1"""
    monomials = list(basis(n, t))
    out = Polynomial.constant(n, 1.0)
    for row in N:
        q = Polynomial(n, {mon: coef for mon, coef in zip(monomials, row)})
        out = out + q * q
    return out


def box_generators(n: int) -> List[Polynomial]:
    gens: List[Polynomial] = []
    for i in range(n):
        y = Polynomial.variable(n, i)
        gens.extend([y + float(BOX), float(BOX) - y])
    return gens


def generate(spec: GenSpec, point_attempts: int = 10000) -> GeneratedInstance:
    """
    Random LSIPP instance on S = [-2, 2]^n with the redundant ball
    ||Y||^2 <= 4n. a_i interpolates the indicator of the i-th of m random
    integer points, b is a random sum of squares plus one and c is uniform
    on [0, 1)^m, so x = 0 is a Slater point.
    """
    point_rng, index_rng, n_rng, c_rng = _streams(spec.seed)
    points = _sample_points(point_rng, spec.m, spec.n, point_attempts)
    a = [lagrange_interpolant(points, i, index_rng) for i in range(spec.m)]

    size = len(basis(spec.n, spec.t))
    b = _sum_of_squares(n_rng.random((size, size)), spec.n, spec.t)
    c = c_rng.random(spec.m)

    problem = LsippProblem(
        nvars=spec.n,
        c=c,
        a=a,
        b=b,
        gens=box_generators(spec.n),
        compact=True,
        ball=float(4 * spec.n),
        name=spec.name,
    )
    Logger.print_debug(f"generated {spec.name} with points {points.tolist()}")
    return GeneratedInstance(spec=spec, problem=problem, points=points)


def bound_check(instance: GeneratedInstance) -> np.ndarray:
    """Lower bounds x_i >= -b(v_i) - 1 valid for every feasible x"""
    return -instance.problem.b.evaluate_many(instance.points) - 1.0
