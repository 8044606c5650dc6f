# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from pathlib import Path
from typing import List

import numpy as np

from lsipp.core.constants import PROBLEMS_DIR
from lsipp.utils.problem_io import ProblemFile, load_problem


def load_testdata_from_file(file_path: Path) -> List[str]:
    """Helper function to load test data from a text file"""

    with open(file_path, "r") as f:
        return [line.replace("\n", "") for line in f]


def load_cases(file_path: Path) -> List[str]:
    """Non-empty lines of an asset file that are not comments"""
    return [
        line
        for line in load_testdata_from_file(file_path)
        if line.strip() and not line.lstrip().startswith("#")
    ]


def random_psd(rng: np.random.Generator, size: int, rank: int | None = None) -> np.ndarray:
    factor = rng.standard_normal((size, rank or size))
    return factor @ factor.T


def golden(name: str) -> ProblemFile:
    """One of the problem files shipped in resources/problems"""
    return load_problem(PROBLEMS_DIR.joinpath(f"{name}.json"))
