# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from argparse import Namespace
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict

from lsipp.core.settings.lsipp_settings import (
    CertifySettings,
    GenSettings,
    HierarchySettings,
    LsippSettings,
    PoptSettings,
    SolverSettings,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2


@dataclass
class RunOptions:
    """Settings of one run: the configuration files overridden by CLI flags"""

    solver: SolverSettings
    certify: CertifySettings
    hierarchy: HierarchySettings
    popt: PoptSettings
    gen: GenSettings

    @classmethod
    def from_args(cls, args: Namespace) -> "RunOptions":
        settings = LsippSettings()
        opts = cls(
            solver=replace(settings.solver),
            certify=replace(settings.certify),
            hierarchy=replace(settings.hierarchy),
            popt=replace(settings.popt),
            gen=replace(settings.gen),
        )
        if getattr(args, "tol", None) is not None:
            opts.solver.tol = args.tol
        if getattr(args, "max_iter", None) is not None:
            opts.solver.max_iter = args.max_iter
        if getattr(args, "rank_tol", None) is not None:
            opts.certify.rank_tol = args.rank_tol
        if getattr(args, "extraction_seed", None) is not None:
            opts.certify.extraction_seed = args.extraction_seed
        if getattr(args, "kmax", None) is not None:
            opts.hierarchy.k_max = args.kmax
        if getattr(args, "homogenize", None) is not None:
            opts.hierarchy.homogenize = args.homogenize
        return opts

    def tolerances(self) -> Dict[str, Any]:
        return {
            "solver": asdict(self.solver),
            "certify": asdict(self.certify),
            "hierarchy": asdict(self.hierarchy),
            "popt": {"atom_v0_tol": self.popt.atom_v0_tol},
        }
