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
from functools import lru_cache
from typing import Dict, Iterator, Sequence, Tuple

import numpy as np

from lsipp.components.polyring.exponents import ExponentVec, monomials_up_to


@dataclass(frozen=True)
class MomentBasis:
    """
    The exponents of N^n_k in graded lex order. A basis of order k is a
    prefix of every basis of higher order, so positions stay valid when a
    moment vector is extended.
    """

    nvars: int
    order: int
    monomials: Tuple[ExponentVec, ...]
    _index: Dict[ExponentVec, int] = field(repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[ExponentVec]:
        return iter(self.monomials)

    def __getitem__(self, position: int) -> ExponentVec:
        return self.monomials[position]

    def __contains__(self, exp: object) -> bool:
        return exp in self._index

    def index(self, exp: Sequence[int]) -> int:
        return self._index[tuple(exp)]

    def exponent_array(self) -> np.ndarray:
        return np.array(self.monomials, dtype=np.int64).reshape(len(self), self.nvars)


@lru_cache(maxsize=None)
def basis(nvars: int, k: int) -> MomentBasis:
    if nvars < 1 or k < 0:
        raise ValueError(f"Invalid basis request: nvars={nvars}, k={k}")
    monomials = monomials_up_to(nvars, k)
    return MomentBasis(nvars, k, monomials, {e: i for i, e in enumerate(monomials)})
