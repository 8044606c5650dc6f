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
from typing import Any, Dict, List, Optional

from lsipp.components.certify.extraction import Atom, extract_atoms
from lsipp.components.certify.rank_utils import RankEntry, rank_profile
from lsipp.components.certify.verification import Verification, verify_certificate
from lsipp.components.moment.moment_vector import MomentVector
from lsipp.components.relax.lsipp_problem import (
    HomogenizedProblem,
    LsippProblem,
    RelaxationOrder,
)
from lsipp.core.errors import ExtractionError
from lsipp.core.logger import Logger
from lsipp.core.settings.lsipp_settings import CertifySettings


@dataclass
class Certificate:
    order_k: int
    flat_t: Optional[int] = None
    ranks: Dict[int, RankEntry] = field(default_factory=dict)
    atoms: List[Atom] = field(default_factory=list)
    certified: bool = False
    verification: Optional[Verification] = None
    reason: str = ""

    @property
    def verified(self) -> bool:
        return self.verification is not None and self.verification.verified

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "order_k": self.order_k,
            "flat_t": self.flat_t,
            "certified": self.certified,
            "verified": self.verified,
            "ranks": {
                str(t): {
                    "lower": e.lower,
                    "upper": e.upper,
                    "gap_ratio": e.gap_ratio if e.gap_ratio != float("inf") else None,
                }
                for t, e in self.ranks.items()
            },
            "atoms": [atom.to_dict() for atom in self.atoms],
            "reason": self.reason,
        }
        if self.verification is not None:
            out["residuals"] = {
                "c": self.verification.c_residual,
                "value": self.verification.value_residual,
            }
        return out


def certify(
    prob: LsippProblem | HomogenizedProblem,
    z_star: MomentVector,
    k: int,
    settings: CertifySettings | None = None,
) -> Certificate:
    """
    Look for a flat order t, extract the atoms of M_t(z*), check that they
    lie in the index set and verify the optimality identities. A flat but
    non-extractable moment matrix leaves the certificate uncertified.
    """
    settings = settings if settings is not None else CertifySettings()
    order = RelaxationOrder.of(prob, k)
    cert = Certificate(order_k=k)
    cert.ranks = rank_profile(z_star, k, order.d_S, order.d_P, settings.rank_tol)
    cert.flat_t = next((t for t, e in cert.ranks.items() if e.flat), None)
    if cert.flat_t is None:
        cert.reason = "no flat order"
        return cert

    try:
        cert.atoms = extract_atoms(
            z_star,
            cert.flat_t,
            settings.rank_tol,
            d_S=order.d_S,
            seed=settings.extraction_seed,
            reconstruction_tol=settings.reconstruction_tol,
        )
    except ExtractionError as e:
        Logger.print_warn(f"order {k}: flat at t={cert.flat_t} but {e}")
        cert.reason = str(e)
        return cert

    outside = [a for a in cert.atoms if not prob.in_index_set(a.point, settings.extract_tol)]
    if outside:
        cert.reason = f"atom {list(outside[0].point)} lies outside the index set"
        Logger.print_warn(f"order {k}: {cert.reason}")
        return cert

    cert.certified = True
    cert.verification = verify_certificate(prob, z_star, cert.atoms, settings.verify_tol)
    if not cert.verification.verified:
        Logger.print_warn(
            f"order {k}: certificate residuals c {cert.verification.c_residual:.2e},"
            f" value {cert.verification.value_residual:.2e} exceed {settings.verify_tol:g}"
        )
    return cert
