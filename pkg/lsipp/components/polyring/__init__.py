# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from lsipp.components.polyring.exponents import (
    ExponentVec,
    basis_size,
    grlex_key,
    half_degree,
    monomials_up_to,
    total_degree,
)
from lsipp.components.polyring.poly_parser import parse_polynomial
from lsipp.components.polyring.polynomial import (
    Polynomial,
    add,
    evaluate,
    homogenize,
    mul,
    top_form,
)

__all__ = [
    "ExponentVec",
    "Polynomial",
    "add",
    "basis_size",
    "evaluate",
    "grlex_key",
    "half_degree",
    "homogenize",
    "monomials_up_to",
    "mul",
    "parse_polynomial",
    "top_form",
    "total_degree",
]
