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
from typing import Dict, Optional

import numpy as np
import scipy.linalg

from lsipp.components.moment.localizer import moment_matrix
from lsipp.components.moment.moment_vector import MomentVector


@dataclass(frozen=True)
class RankEntry:
    """Ranks of M_{t-d_S}(z) and M_t(z), and the singular value gap of M_t"""

    t: int
    lower: int
    upper: int
    gap_ratio: float

    @property
    def flat(self) -> bool:
        return self.lower == self.upper


def singular_values(M: np.ndarray) -> np.ndarray:
    return scipy.linalg.svdvals(M)


def numeric_rank(M: np.ndarray, rank_tol: float) -> int:
    """Number of singular values above rank_tol * max(1, sigma_max)"""
    sigma = singular_values(M)
    if sigma.size == 0:
        return 0
    return int(np.sum(sigma > rank_tol * max(1.0, float(sigma[0]))))


def rank_gap_ratio(M: np.ndarray, rank_tol: float) -> float:
    """
    Ratio of the last retained to the first dropped singular value, inf
    when nothing is dropped and 0 when nothing is retained.
    """
    sigma = singular_values(M)
    r = numeric_rank(M, rank_tol)
    if r == sigma.size:
        return float("inf")
    if r == 0:
        return 0.0
    dropped = float(sigma[r])
    return float("inf") if dropped == 0.0 else float(sigma[r - 1]) / dropped


def rank_profile(
    z: MomentVector, k: int, d_S: int, d_P: int, rank_tol: float
) -> Dict[int, RankEntry]:
    """Rank pairs for every t in [d_P, k]"""
    profile: Dict[int, RankEntry] = {}
    for t in range(d_P, k + 1):
        upper = moment_matrix(z, t)
        lower = moment_matrix(z, t - d_S)
        profile[t] = RankEntry(
            t=t,
            lower=numeric_rank(lower, rank_tol),
            upper=numeric_rank(upper, rank_tol),
            gap_ratio=rank_gap_ratio(upper, rank_tol),
        )
    return profile


def check_flatness(
    z: MomentVector, k: int, d_S: int, d_P: int, rank_tol: float
) -> Optional[int]:
    """Smallest t in [d_P, k] with rank M_{t-d_S}(z) == rank M_t(z)"""
    for t, entry in rank_profile(z, k, d_S, d_P, rank_tol).items():
        if entry.flat:
            return t
    return None
