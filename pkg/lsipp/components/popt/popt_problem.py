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
from typing import List

from lsipp.components.polyring.polynomial import Polynomial
from lsipp.components.relax.lsipp_problem import LsippProblem
from lsipp.core.errors import DimensionMismatchError


@dataclass
class PoptProblem:
    """f* = inf f(y) over y in S = {g_j >= 0}"""

    nvars: int
    f: Polynomial
    gens: List[Polynomial] = field(default_factory=list)
    compact: bool = False
    ball: float | None = None
    name: str = ""

    def __post_init__(self) -> None:
        self.gens = list(self.gens)
        for p in [self.f, *self.gens]:
            if p.nvars != self.nvars:
                raise DimensionMismatchError(self.nvars, p.nvars)

    @property
    def D_f(self) -> int:
        return self.f.degree


def to_lsipp(p: PoptProblem) -> LsippProblem:
    """
    inf -x s.t. f(y) - x >= 0 on S, i.e. m = 1, a = -1, b = f, c = -1. The
    optimum of the result is -f*.
    """
    return LsippProblem(
        nvars=p.nvars,
        c=[-1.0],
        a=[Polynomial.constant(p.nvars, -1.0)],
        b=p.f,
        gens=p.gens,
        compact=p.compact,
        ball=p.ball,
        name=p.name,
    )
