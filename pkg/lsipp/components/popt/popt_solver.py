# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import List, Optional

import numpy as np

from lsipp.components.certify.certificate import Certificate, certify
from lsipp.components.moment.moment_vector import MomentVector
from lsipp.components.popt.popt_problem import PoptProblem, to_lsipp
from lsipp.components.relax.hierarchy import HierarchyRow, run_hierarchy
from lsipp.components.relax.lsipp_problem import (
    HomogenizedProblem,
    LsippProblem,
    homogenize_problem,
)
from lsipp.components.relax.relaxations import build_moment, build_moment_h, build_sos
from lsipp.components.sdp.sdp_problem import SdpProblem, SdpSolution
from lsipp.components.sdp.solver import solve
from lsipp.core.logger import Logger
from lsipp.core.settings.lsipp_settings import (
    CertifySettings,
    PoptSettings,
    SolverSettings,
)
from lsipp.core.types.solver_status import SolverStatus

AT_INFINITY = "minimum attained only at infinity direction"


@dataclass
class PoptResult:
    k: int
    value: float
    status: SolverStatus
    solve_ms: float = 0.0
    sos_value: Optional[float] = None
    certificate: Optional[Certificate] = None
    minimizers: List[np.ndarray] = field(default_factory=list)
    message: str = ""
    solution: Optional[SdpSolution] = field(default=None, repr=False)

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.certified


def _normalized(sdp: SdpProblem) -> SdpProblem:
    """
    Turn the moment relaxation of the LSIPP image into min L_z(f) with the
    first row, -z_normal = -1, rewritten as z_normal = 1.
    """
    E = sdp.eq_matrix.copy()  # type: ignore[union-attr]
    e = sdp.eq_rhs.copy()  # type: ignore[union-attr]
    E[0] = -E[0]
    e[0] = -e[0]
    return replace(
        sdp,
        objective=-sdp.objective,
        maximize=False,
        eq_matrix=E,
        eq_rhs=e,
        eq_labels=["normalization", *sdp.eq_labels[1:]],
    )


def build_popt_moment(p: PoptProblem, k: int) -> SdpProblem:
    """min L_z(f) s.t. z_0 = 1 and the moment/localizing matrices PSD"""
    return _normalized(build_moment(to_lsipp(p), k))


def build_popt_moment_h(p: PoptProblem, k: int) -> SdpProblem:
    """min L_z(f^h) s.t. z_(D_f, 0, ..., 0) = 1 on the homogenized data"""
    return _normalized(build_moment_h(homogenize_problem(to_lsipp(p)), k))


def dehomogenize_atoms(
    certificate: Certificate, atom_v0_tol: float
) -> List[np.ndarray]:
    """v / v0 for every atom (v0, v) away from the hyperplane at infinity"""
    return [
        atom.point[1:] / atom.point[0]
        for atom in certificate.atoms
        if atom.point[0] > atom_v0_tol
    ]


def _run(
    lsipp: LsippProblem | HomogenizedProblem,
    sdp: SdpProblem,
    k: int,
    solver_settings: SolverSettings | None,
    certify_settings: CertifySettings | None,
) -> PoptResult:
    start = time.perf_counter()
    solution = solve(sdp, solver_settings)
    result = PoptResult(
        k=k,
        value=solution.objective_value,
        status=solution.status,
        solve_ms=1000.0 * (time.perf_counter() - start),
        solution=solution,
    )
    if np.all(np.isfinite(solution.z_star)):
        z_star = MomentVector(lsipp.nvars, 2 * k, solution.z_star)
        result.certificate = certify(lsipp, z_star, k, certify_settings)
    return result


def solve_compact(
    p: PoptProblem,
    k: int,
    solver_settings: SolverSettings | None = None,
    certify_settings: CertifySettings | None = None,
    with_sos: bool = True,
) -> PoptResult:
    """
    Classic moment relaxation of order k. Certified atoms are global
    minimizers; the SOS bound f_sos_k is solved alongside when requested.
    """
    lsipp = to_lsipp(p)
    result = _run(lsipp, build_popt_moment(p, k), k, solver_settings, certify_settings)
    if result.certified:
        result.minimizers = [atom.point for atom in result.certificate.atoms]  # type: ignore[union-attr]
    if with_sos:
        sos = solve(build_sos(lsipp, k), solver_settings)
        if sos.status == SolverStatus.OPTIMAL:
            # min -x over the SOS cone, so f_sos = x
            result.sos_value = -sos.objective_value
    return result


def solve_noncompact(
    p: PoptProblem,
    k: int,
    solver_settings: SolverSettings | None = None,
    certify_settings: CertifySettings | None = None,
    popt_settings: PoptSettings | None = None,
) -> PoptResult:
    """
    Homogenized moment relaxation of order k for a stably bounded f. Atoms
    (v0, v) with v0 > atom_v0_tol give the minimizers v / v0.
    """
    popt_settings = popt_settings if popt_settings is not None else PoptSettings()
    hprob = homogenize_problem(to_lsipp(p))
    result = _run(hprob, build_popt_moment_h(p, k), k, solver_settings, certify_settings)
    _attach_minimizers(result, popt_settings.atom_v0_tol)
    return result


def _attach_minimizers(result: PoptResult, atom_v0_tol: float) -> None:
    if not result.certified:
        return
    result.minimizers = dehomogenize_atoms(result.certificate, atom_v0_tol)  # type: ignore[arg-type]
    if not result.minimizers:
        result.message = AT_INFINITY
        Logger.print_warn(f"order {result.k}: {AT_INFINITY}")


def _from_row(row: HierarchyRow) -> PoptResult:
    return PoptResult(
        k=row.k,
        value=-row.value,
        status=row.status,
        solve_ms=row.solve_ms,
        certificate=row.certificate,
        solution=row.solution,
    )


def run_popt_hierarchy(
    p: PoptProblem,
    k_min: int | None = None,
    k_max: int | None = None,
    compact: bool | None = None,
    solver_settings: SolverSettings | None = None,
    certify_settings: CertifySettings | None = None,
    popt_settings: PoptSettings | None = None,
    inaccurate_tol: float = 1e-6,
) -> List[PoptResult]:
    """
    Sweep the orders of the classic (compact) or homogenized hierarchy and
    stop at the first certified order. Values are f_mom_k = -p_mom_k of the
    LSIPP image.
    """
    popt_settings = popt_settings if popt_settings is not None else PoptSettings()
    compact = p.compact if compact is None else compact
    lsipp = to_lsipp(p)
    target: LsippProblem | HomogenizedProblem = lsipp if compact else homogenize_problem(lsipp)
    rows = run_hierarchy(
        target,
        k_min,
        k_max,
        solver_settings=solver_settings,
        certify_settings=certify_settings,
        inaccurate_tol=inaccurate_tol,
    )
    results = [_from_row(row) for row in rows]
    for result in results:
        if compact:
            if result.certified:
                result.minimizers = [a.point for a in result.certificate.atoms]  # type: ignore[union-attr]
        else:
            _attach_minimizers(result, popt_settings.atom_v0_tol)
    return results
