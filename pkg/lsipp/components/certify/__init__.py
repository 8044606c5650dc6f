# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from lsipp.components.certify.certificate import Certificate, certify
from lsipp.components.certify.extraction import (
    Atom,
    extract_atoms,
    reconstruction_residual,
    synthesize,
)
from lsipp.components.certify.rank_utils import (
    RankEntry,
    check_flatness,
    numeric_rank,
    rank_gap_ratio,
    rank_profile,
)
from lsipp.components.certify.verification import Verification, verify_certificate

__all__ = [
    "Atom",
    "Certificate",
    "RankEntry",
    "Verification",
    "certify",
    "check_flatness",
    "extract_atoms",
    "numeric_rank",
    "rank_gap_ratio",
    "rank_profile",
    "reconstruction_residual",
    "synthesize",
    "verify_certificate",
]
