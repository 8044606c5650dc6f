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
from typing import Optional

import numpy as np

from lsipp.components.popt.popt_problem import PoptProblem
from lsipp.core.constants import SPHERE_FILTER_TOL
from lsipp.core.logger import Logger


@dataclass(frozen=True)
class StableBoundednessDiagnostic:
    """
    Sampled minimum of the top form of f over the sphere points where every
    top form of a generator is nonnegative. A positive minimum supports
    stable boundedness, a nonpositive one is a counterexample.
    """

    samples: int
    feasible: int
    min_value: Optional[float]
    argmin: Optional[np.ndarray]

    @property
    def positive(self) -> bool:
        return self.min_value is not None and self.min_value > 0

    @property
    def counterexample(self) -> bool:
        return self.min_value is not None and self.min_value <= 0


def check_stable_boundedness_witness(
    p: PoptProblem, samples: int = 100000, seed: int = 0
) -> StableBoundednessDiagnostic:
    rng = np.random.default_rng(seed)
    points = rng.standard_normal((samples, p.nvars))
    points /= np.linalg.norm(points, axis=1, keepdims=True)

    mask = np.ones(samples, dtype=bool)
    for g in p.gens:
        if g.is_zero:
            continue
        mask &= g.top_form().evaluate_many(points) >= -SPHERE_FILTER_TOL
    kept = points[mask]
    if not kept.size:
        Logger.print_warn("no sphere sample satisfies the top forms of the generators")
        return StableBoundednessDiagnostic(samples, 0, None, None)

    values = p.f.top_form().evaluate_many(kept)
    best = int(np.argmin(values))
    return StableBoundednessDiagnostic(
        samples=samples,
        feasible=int(kept.shape[0]),
        min_value=float(values[best]),
        argmin=kept[best],
    )
