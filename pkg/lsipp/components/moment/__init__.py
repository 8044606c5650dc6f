# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from lsipp.components.moment.localizer import (
    LocalizerStructure,
    localizer_structure,
    localizing_matrix,
    moment_matrix,
)
from lsipp.components.moment.moment_basis import MomentBasis, basis
from lsipp.components.moment.moment_vector import MomentVector, riesz, zeta_vector

__all__ = [
    "LocalizerStructure",
    "MomentBasis",
    "MomentVector",
    "basis",
    "localizer_structure",
    "localizing_matrix",
    "moment_matrix",
    "riesz",
    "zeta_vector",
]
