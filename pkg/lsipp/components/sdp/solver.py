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
from typing import List, Tuple

import numpy as np
import scipy.linalg
import scipy.sparse

from lsipp.components.sdp.presolve import presolve
from lsipp.components.sdp.sdp_problem import (
    Residuals,
    SdpProblem,
    SdpSolution,
    failed_solution,
)
from lsipp.core.logger import Logger
from lsipp.core.settings.lsipp_settings import SolverSettings
from lsipp.core.types.solver_status import SolverStatus

MIN_STEP = 1e-10
MAX_TINY_STEPS = 5
DIVERGENCE = 1e10
BACKTRACKS = 40
BACKTRACK = 0.6
MONOTONE_SLACK = 1e-12
EIG_FLOOR = 1e-14
# lower bound on lambda_min(XS) / mu for accepted iterates
NEIGHBOURHOOD = 1e-3
# below this centrality the centering parameter is at least RECENTER_SIGMA
RECENTER = 1e-2
RECENTER_SIGMA = 0.5


class _NumericalFailure(Exception):
    pass


@dataclass
class _Block:
    size: int
    var_index: np.ndarray
    stack: np.ndarray
    flat: scipy.sparse.csr_matrix
    constant: np.ndarray


@dataclass
class _Direction:
    dz: np.ndarray
    dy: np.ndarray
    dX: List[np.ndarray]
    dS: List[np.ndarray]


@dataclass
class _Iterate:
    z: np.ndarray
    y: np.ndarray
    X: List[np.ndarray]
    S: List[np.ndarray]


def _sym(M: np.ndarray) -> np.ndarray:
    return 0.5 * (M + M.T)


def _inner(A: List[np.ndarray], B: List[np.ndarray]) -> float:
    return float(sum(np.vdot(a, b) for a, b in zip(A, B)))


def _chol(M: np.ndarray) -> np.ndarray | None:
    try:
        return scipy.linalg.cholesky(M, lower=True, check_finite=False)
    except (scipy.linalg.LinAlgError, ValueError):
        return None


def _max_step(M: np.ndarray, dM: np.ndarray) -> float:
    """
    Largest alpha with M + alpha dM PSD. M is expected positive definite;
    when its Cholesky factor breaks down the tiny eigenvalues are floored.
    """
    L = _chol(M)
    if L is not None:
        T = scipy.linalg.solve_triangular(L, dM, lower=True)
        T = scipy.linalg.solve_triangular(L, T.T, lower=True)
    else:
        w, V = scipy.linalg.eigh(_sym(M))
        w = np.maximum(w, EIG_FLOOR * max(float(w[-1]), EIG_FLOOR))
        R = V / np.sqrt(w)
        T = R.T @ dM @ R
    lam = float(scipy.linalg.eigvalsh(_sym(T)).min())
    return np.inf if lam >= 0 else -1.0 / lam


def _centrality(X: List[np.ndarray], S: List[np.ndarray], mu: float) -> float:
    """lambda_min(XS) / mu over all blocks, 0 when an iterate is not positive definite"""
    if not X:
        return np.inf
    if mu <= 0:
        return 0.0
    worst = np.inf
    for x, s in zip(X, S):
        L = _chol(x)
        if L is None or _chol(s) is None:
            return 0.0
        worst = min(worst, float(scipy.linalg.eigvalsh(_sym(L.T @ s @ L))[0]))
    return worst / mu


class InteriorPointSolver:
    """
    Infeasible primal-dual path-following method with the HKM direction and
    a Mehrotra predictor-corrector step. Free variables and equality rows
    enter the Newton system directly:

        [ H   E^T ] [ dz ]   [ -r_dual + A*(G) ]
        [ E    0  ] [ -dy] = [  e - E z        ]

    with H_il = <B_i, X B_l S^-1> summed over the blocks.
    """

    def __init__(self, prob: SdpProblem, opts: SolverSettings) -> None:
        self.prob = prob
        self.opts = opts
        self.sign = prob.sense_sign
        self.f = self.sign * prob.objective
        self.E = prob.eq_matrix
        self.e = prob.eq_rhs
        self.N = prob.nfree
        self.p = prob.n_eq
        self.blocks = [
            _Block(
                size=b.size,
                var_index=b.var_index,
                stack=b.coeffs,
                flat=scipy.sparse.csr_matrix(b.coeffs.reshape(b.var_index.size, -1)),
                constant=b.constant,
            )
            for b in prob.blocks
        ]
        self.dim = max(1, sum(b.size for b in self.blocks))
        self.norm_b0 = 1.0 + float(
            np.sqrt(sum(np.sum(b.constant**2) for b in self.blocks))
        )
        self.norm_e = 1.0 + float(np.linalg.norm(self.e))
        self.norm_f = 1.0 + float(np.linalg.norm(self.f))

    # linear maps

    def _lmi(self, z: np.ndarray) -> List[np.ndarray]:
        """A_j(z) without the constants"""
        return [
            (b.flat.T @ z[b.var_index]).reshape(b.size, b.size) for b in self.blocks
        ]

    def _adjoint(self, Ms: List[np.ndarray]) -> np.ndarray:
        out = np.zeros(self.N)
        for b, M in zip(self.blocks, Ms):
            out[b.var_index] += b.flat @ M.ravel()
        return out

    # iterates

    def _initial_point(self) -> Tuple[np.ndarray, np.ndarray, List[np.ndarray], List[np.ndarray]]:
        if self.p:
            z, *_ = scipy.linalg.lstsq(self.E, self.e)
        else:
            z = np.zeros(self.N)
        y = np.zeros(self.p)
        X: List[np.ndarray] = []
        S: List[np.ndarray] = []
        for b in self.blocks:
            coef_norms = np.sqrt(np.sum(b.stack**2, axis=(1, 2)))
            f_local = np.abs(self.f[b.var_index]) if b.var_index.size else np.zeros(1)
            denom = 1.0 + (coef_norms if coef_norms.size else np.zeros(1))
            zeta = max(10.0, np.sqrt(b.size), b.size * float(np.max((1.0 + f_local) / denom)))
            eta = max(
                10.0,
                np.sqrt(b.size),
                float(np.linalg.norm(b.constant)),
                float(coef_norms.max()) if coef_norms.size else 0.0,
            )
            X.append(zeta * np.eye(b.size))
            S.append(eta * np.eye(b.size))
        return z, y, X, S

    def _residuals(
        self, z: np.ndarray, y: np.ndarray, X: List[np.ndarray], S: List[np.ndarray]
    ) -> Tuple[List[np.ndarray], np.ndarray, np.ndarray]:
        lin = self._lmi(z)
        Rp = [b.constant + l - s for b, l, s in zip(self.blocks, lin, S)]
        rd = self.f - self._adjoint(X) - (self.E.T @ y if self.p else 0.0)
        re = self.e - self.E @ z if self.p else np.zeros(0)
        return Rp, rd, re

    def _objectives(self, z: np.ndarray, y: np.ndarray, X: List[np.ndarray]) -> Tuple[float, float]:
        pobj = float(self.f @ z)
        dobj = float(self.e @ y) - _inner(X, [b.constant for b in self.blocks])
        return pobj, dobj

    def _measure(
        self,
        z: np.ndarray,
        y: np.ndarray,
        X: List[np.ndarray],
        S: List[np.ndarray],
    ) -> Residuals:
        Rp, rd, re = self._residuals(z, y, X, S)
        pobj, dobj = self._objectives(z, y, X)
        lmi_res = float(np.sqrt(sum(np.sum(r**2) for r in Rp))) / self.norm_b0
        eq_res = float(np.linalg.norm(re)) / self.norm_e if self.p else 0.0
        dual_res = float(np.linalg.norm(rd)) / self.norm_f
        comp = _inner(X, S)
        gap = max(abs(pobj - dobj), comp) / (1.0 + abs(pobj))
        return Residuals(max(lmi_res, eq_res), dual_res, gap)

    # Newton system

    def _schur(self, X: List[np.ndarray], S_inv: List[np.ndarray]) -> np.ndarray:
        H = np.zeros((self.N, self.N))
        for b, Xj, Sj in zip(self.blocks, X, S_inv):
            if not b.var_index.size:
                continue
            W = np.matmul(np.matmul(Xj, b.stack), Sj)
            H_blk = b.flat @ W.reshape(b.var_index.size, -1).T
            H[np.ix_(b.var_index, b.var_index)] += H_blk
        return _sym(H)

    def _factor(self, H: np.ndarray):
        scale = max(1.0, float(np.abs(np.diag(H)).max()) if self.N else 1.0)
        reg = 1e-14 * scale
        K = np.zeros((self.N + self.p, self.N + self.p))
        K[: self.N, : self.N] = H + reg * np.eye(self.N)
        if self.p:
            K[: self.N, self.N :] = self.E.T
            K[self.N :, : self.N] = self.E
            K[self.N :, self.N :] = -reg * np.eye(self.p)
        if not np.all(np.isfinite(K)):
            raise _NumericalFailure("non finite Schur complement")
        lu, piv = scipy.linalg.lu_factor(K, check_finite=False)
        if np.min(np.abs(np.diag(lu))) <= 1e-300:
            raise _NumericalFailure("singular Schur complement")
        return K, (lu, piv)

    def _direction(
        self,
        factor,
        X: List[np.ndarray],
        S_inv: List[np.ndarray],
        Rp: List[np.ndarray],
        rd: np.ndarray,
        re: np.ndarray,
        G: List[np.ndarray],
    ) -> _Direction:
        rhs = np.concatenate([-(rd - self._adjoint(G)), re])
        K, lu = factor
        sol = scipy.linalg.lu_solve(lu, rhs, check_finite=False)
        # one step of iterative refinement
        sol = sol + scipy.linalg.lu_solve(lu, rhs - K @ sol, check_finite=False)
        if not np.all(np.isfinite(sol)):
            raise _NumericalFailure("non finite Newton direction")
        dz = sol[: self.N]
        dy = -sol[self.N :]
        lin = self._lmi(dz)
        dS = [r + l for r, l in zip(Rp, lin)]
        dX = [_sym(g - x @ l @ si) for g, x, l, si in zip(G, X, lin, S_inv)]
        return _Direction(dz, dy, dX, dS)

    def _steps(self, X, S, d: _Direction) -> Tuple[float, float]:
        """Fraction-to-the-boundary step lengths for the X/y and the z/S part"""
        a_x = min([_max_step(x, dx) for x, dx in zip(X, d.dX)], default=np.inf)
        a_s = min([_max_step(s, ds) for s, ds in zip(S, d.dS)], default=np.inf)
        gamma = min(self.opts.step_factor, 0.9 + 0.09 * min(1.0, a_x, a_s))
        return min(1.0, gamma * a_x), min(1.0, gamma * a_s)

    def _accept(
        self,
        it: _Iterate,
        mu: float,
        centrality: float,
        d: _Direction,
        common: bool = False,
    ):
        """
        Shorten the step along d until the new iterates are positive
        definite, the complementarity gap does not grow and lambda_min(XS)
        stays within the neighbourhood of the central path. With a common
        step length the gap decreases to first order whenever sigma < 1.
        """
        a_x, a_s = self._steps(it.X, it.S, d)
        if common:
            a_x = a_s = min(a_x, a_s)
        theta = min(NEIGHBOURHOOD, 0.5 * centrality)
        limit = mu + MONOTONE_SLACK * max(1.0, mu)
        for _ in range(BACKTRACKS):
            X = [_sym(x + a_x * dx) for x, dx in zip(it.X, d.dX)]
            S = [_sym(s + a_s * ds) for s, ds in zip(it.S, d.dS)]
            mu_new = _inner(X, S) / self.dim
            if mu_new <= limit and _centrality(X, S, mu_new) >= theta:
                return a_x, a_s, _Iterate(it.z + a_s * d.dz, it.y + a_x * d.dy, X, S)
            a_x *= BACKTRACK
            a_s *= BACKTRACK
        return None

    def _sigma(self, mu: float, mu_aff: float, a_aff: float, centrality: float) -> float:
        if mu <= 0:
            return 0.0
        expon = max(1.0, 3.0 * a_aff**2)
        sigma = float(np.clip((max(mu_aff, 0.0) / mu) ** expon, 0.0, 1.0))
        if centrality < RECENTER:
            sigma = max(sigma, RECENTER_SIGMA)
        return sigma

    def _step(self, it: _Iterate, mu: float):
        """One predictor-corrector step, falling back to a centering step"""
        X, S = it.X, it.S
        centrality = _centrality(X, S, mu)
        Rp, rd, re = self._residuals(it.z, it.y, X, S)
        S_inv = [
            _sym(scipy.linalg.cho_solve(scipy.linalg.cho_factor(s), np.eye(s.shape[0])))
            for s in S
        ]
        factor = self._factor(self._schur(X, S_inv))

        # predictor
        G = [-x - x @ r @ si for x, r, si in zip(X, Rp, S_inv)]
        aff = self._direction(factor, X, S_inv, Rp, rd, re, G)
        a_x_aff, a_s_aff = self._steps(X, S, aff)
        mu_aff = _inner(
            [x + a_x_aff * dx for x, dx in zip(X, aff.dX)],
            [s + a_s_aff * ds for s, ds in zip(S, aff.dS)],
        ) / self.dim
        sigma = self._sigma(mu, mu_aff, min(a_x_aff, a_s_aff), centrality)

        # corrector
        G = [
            sigma * mu * si - x - x @ r @ si - dx @ ds @ si
            for x, r, si, dx, ds in zip(X, Rp, S_inv, aff.dX, aff.dS)
        ]
        d = self._direction(factor, X, S_inv, Rp, rd, re, G)
        accepted = self._accept(it, mu, centrality, d)
        if accepted is None:
            accepted = self._accept(it, mu, centrality, d, common=True)
        if accepted is not None:
            return accepted

        # the first order centering direction always admits a short common step
        G = [RECENTER_SIGMA * mu * si - x - x @ r @ si for x, r, si in zip(X, Rp, S_inv)]
        d = self._direction(factor, X, S_inv, Rp, rd, re, G)
        return self._accept(it, mu, centrality, d, common=True)

    # main loop

    def run(self) -> SdpSolution:
        opts = self.opts
        it = _Iterate(*self._initial_point())
        history: List[float] = [_inner(it.X, it.S) / self.dim]
        status = SolverStatus.MAX_ITER
        message = f"no convergence within {opts.max_iter} iterations"
        direction = None
        best, best_score = it, np.inf
        tiny_steps = 0
        k = 0

        for k in range(opts.max_iter + 1):
            res = self._measure(it.z, it.y, it.X, it.S)
            score = max(res.primal_feas, res.dual_feas, res.gap)
            if score < best_score:
                best, best_score = it, score
            if res.within(opts.tol):
                status = SolverStatus.OPTIMAL
                message = "converged"
                break
            if k == opts.max_iter:
                break

            pobj, dobj = self._objectives(it.z, it.y, it.X)
            Logger.print_debug(
                f"ipm {k:3d}: pobj {self.sign * pobj:+.8e} dobj {self.sign * dobj:+.8e}"
                f" pinf {res.primal_feas:.1e} dinf {res.dual_feas:.1e} gap {res.gap:.1e}"
            )
            if k >= opts.stall_iterations:
                verdict = self._divergence(it.z, it.y, it.X, pobj, dobj, res)
                if verdict is not None:
                    status, direction, message = verdict
                    best = it
                    break

            try:
                accepted = self._step(it, history[-1])
            except (_NumericalFailure, scipy.linalg.LinAlgError, ValueError) as e:
                status = SolverStatus.NUMERICAL_TROUBLE
                message = f"iteration {k}: {e}"
                break
            if accepted is None:
                status = SolverStatus.NUMERICAL_TROUBLE
                message = f"iteration {k}: no step keeps the iterates centred"
                break
            a_x, a_s, it = accepted

            if max(a_x, a_s) < MIN_STEP:
                tiny_steps += 1
                if tiny_steps >= MAX_TINY_STEPS:
                    status = SolverStatus.NUMERICAL_TROUBLE
                    message = f"iteration {k}: step length collapsed"
                    break
            else:
                tiny_steps = 0
            history.append(_inner(it.X, it.S) / self.dim)

        if status != SolverStatus.OPTIMAL:
            it = best
        res = self._measure(it.z, it.y, it.X, it.S)
        pobj, dobj = self._objectives(it.z, it.y, it.X)
        Logger.print_debug(f"ipm finished after {k} iterations: {status} ({message})")
        return SdpSolution(
            status=status,
            z_star=it.z,
            objective_value=self.prob.objective_value(it.z),
            dual_objective=self.sign * dobj + self.prob.objective_constant,
            dual_matrices=it.X,
            eq_duals=it.y,
            residuals=res,
            iterations=k,
            history=history,
            certificate_direction=direction,
            message=message,
        )

    def _divergence(self, z, y, X, pobj: float, dobj: float, res: Residuals):
        """Heuristic detection of unbounded or infeasible problems"""
        x_norm = max([float(np.abs(x).max()) for x in X] + [float(np.abs(y).max()) if y.size else 0.0])
        if pobj < -DIVERGENCE and res.primal_feas < 1e-3:
            return (
                SolverStatus.UNBOUNDED,
                z / np.linalg.norm(z),
                "primal objective diverges on a nearly feasible ray",
            )
        if dobj > DIVERGENCE and x_norm > DIVERGENCE and res.dual_feas < 1e-3:
            return (
                SolverStatus.INFEASIBLE,
                np.concatenate([x.ravel() for x in X]) / x_norm,
                "dual objective diverges, the linear matrix inequalities look infeasible",
            )
        return None


def solve(prob: SdpProblem, opts: SolverSettings | None = None) -> SdpSolution:
    """
    Solve an SDP in LMI form to the accuracy of 'opts.tol'. Equality rows are
    cleaned and the data scaled first; the reported solution refers to the
    problem as given.
    """
    opts = opts if opts is not None else SolverSettings()
    record = presolve(prob)
    if record.infeasible:
        return failed_solution(prob, SolverStatus.INFEASIBLE, record.message)
    raw = InteriorPointSolver(record.problem, opts).run()
    return record.recover(raw)
