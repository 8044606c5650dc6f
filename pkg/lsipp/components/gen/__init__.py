# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from lsipp.components.gen.generator import (
    GeneratedInstance,
    GenSpec,
    bound_check,
    box_generators,
    generate,
    lagrange_interpolant,
)

__all__ = [
    "GenSpec",
    "GeneratedInstance",
    "bound_check",
    "box_generators",
    "generate",
    "lagrange_interpolant",
]
