"""Projection-based continuous-time maximization of trajectory information.

The optimizer works on the extended state (x, psi) so the objective

    J = Q_p / lambda_min(I_cont) + 1/2 integral [ (x-x_d)' Q_tau (x-x_d) + u' R_tau u ] dt

can trade information content against tracking and control effort.  Each
iteration linearizes J and the extended dynamics about the current feasible
trajectory, solves a linear-quadratic problem (backward Riccati plus affine
adjoint, then a forward sweep) for a tangent-space descent direction, takes
an Armijo-backtracked step, and maps the perturbed curve back onto the
dynamics manifold with a feedback projection.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DegenerateEigenvalue,
    IntegrationError,
    LinesearchFailed,
    RiccatiBlowup,
    SingularInformation,
    StillSingular,
)
from .information import InfoMatrix, fim_continuous, identifiability_check, min_eigenpair, sigma_inverse
from .model import PlantModel
from .numkit import DenseTrajectory, IntegratorConfig, integrate

__all__ = [
    "Weights",
    "ExtendedTrajectory",
    "DescentDirection",
    "OptState",
    "simulate_extended",
    "objective",
    "cost_linearization",
    "dynamics_linearization",
    "feedback_gain",
    "project",
    "descent_direction",
    "armijo_step",
    "optimize",
    "perturb_initial",
]

_SINGULARITY_REL = 1e-12


def _check_psd(name, mat, strict=False):
    mat = np.atleast_2d(np.asarray(mat, float))
    if mat.shape[0] != mat.shape[1] or not np.allclose(mat, mat.T, rtol=1e-10, atol=1e-14):
        raise ValueError(f"{name} must be square symmetric")
    ev = np.linalg.eigvalsh(mat)
    floor = -1e-10 * max(np.max(np.abs(ev)), 1.0)
    if strict and np.min(ev) <= 0:
        raise ValueError(f"{name} must be positive definite")
    if not strict and np.min(ev) < floor:
        raise ValueError(f"{name} must be positive semi-definite")
    return mat


@dataclass(frozen=True)
class Weights:
    """Objective, local-model, and feedback-design weights.

    ``q_p >= 0`` scales the information term; ``q_tau`` (PSD) and ``r_tau``
    (PD) weight tracking and control effort; ``q_n``/``r_n`` shape the
    local quadratic model of the descent solve; ``q_k``/``r_k`` design the
    projection feedback gain.
    """

    q_p: float
    q_tau: np.ndarray
    r_tau: np.ndarray
    q_n: np.ndarray
    r_n: np.ndarray
    q_k: np.ndarray
    r_k: np.ndarray

    def __post_init__(self):
        if self.q_p < 0:
            raise ValueError("q_p must be >= 0")
        object.__setattr__(self, "q_tau", _check_psd("q_tau", self.q_tau))
        object.__setattr__(self, "r_tau", _check_psd("r_tau", self.r_tau, strict=True))
        object.__setattr__(self, "q_n", _check_psd("q_n", self.q_n))
        object.__setattr__(self, "r_n", _check_psd("r_n", self.r_n, strict=True))
        object.__setattr__(self, "q_k", _check_psd("q_k", self.q_k))
        object.__setattr__(self, "r_k", _check_psd("r_k", self.r_k, strict=True))

    @classmethod
    def default(cls, model: PlantModel, q_p: float = 10.0,
                q_tau=None, r_tau=0.1, q_n_scale: float = 1.0,
                r_n_scale: float = 1.0) -> "Weights":
        """Flagship defaults: information-driven with a control penalty.

        The feedback design weights put zeros on the sensitivity block, so
        the projection gain reduces to standard state feedback.
        """
        n, m, p = model.n, model.m, model.p
        d = n + n * p
        q_tau = np.zeros((n, n)) if q_tau is None else np.atleast_2d(np.asarray(q_tau, float))
        if q_tau.shape == (n,) or q_tau.shape == (1, n):
            q_tau = np.diag(np.ravel(q_tau))
        r_tau_arr = np.eye(m) * r_tau if np.isscalar(r_tau) else np.atleast_2d(r_tau)
        q_k = np.zeros((d, d))
        q_k[:n, :n] = np.eye(n)
        return cls(
            q_p=q_p,
            q_tau=q_tau,
            r_tau=r_tau_arr,
            q_n=np.eye(d) * q_n_scale,
            r_n=np.eye(m) * r_n_scale,
            q_k=q_k,
            r_k=np.eye(m),
        )


class ExtendedTrajectory:
    """Feasible (or candidate) curve of the extended state and control."""

    def __init__(self, model: PlantModel, xbar: DenseTrajectory,
                 u: DenseTrajectory, feasible: bool = True):
        n, p = model.n, model.p
        if xbar.dim != n + n * p:
            raise ValueError(f"extended state dim {xbar.dim} != {n + n * p}")
        self.n = n
        self.p = p
        self.xbar = xbar
        self.u = u
        self.feasible = feasible
        self.state_traj = DenseTrajectory(
            xbar.times, xbar.values[:, :n], xbar.derivs[:, :n], "hermite")
        self.psi_traj = DenseTrajectory(
            xbar.times, xbar.values[:, n:], xbar.derivs[:, n:], "hermite")

    @property
    def t0(self) -> float:
        return self.xbar.t0

    @property
    def tf(self) -> float:
        return self.xbar.tf

    @property
    def dim(self) -> int:
        return self.xbar.dim

    def state(self, t) -> np.ndarray:
        return self.xbar.eval(t)[:self.n]

    def psi(self, t) -> np.ndarray:
        return self.xbar.eval(t)[self.n:].reshape(self.n, self.p)


@dataclass
class DescentDirection:
    """Tangent-space perturbation (zbar, v) and its predicted derivative."""

    zbar: DenseTrajectory
    v: DenseTrajectory
    dj_zeta: float


@dataclass
class OptState:
    """Final trajectory, gain, and per-iteration diagnostics."""

    eta: ExtendedTrajectory
    gain: DenseTrajectory | None
    info: InfoMatrix | None
    objective: float
    trace: list
    converged: bool
    reason: str


def _as_curve(x_d, n):
    if x_d is None:
        zero = np.zeros(n)
        return lambda t: zero
    if isinstance(x_d, DenseTrajectory):
        return x_d.eval
    return x_d


def _knots_with_midpoints(times):
    mids = 0.5 * (times[:-1] + times[1:])
    out = np.empty(times.size + mids.size)
    out[0::2] = times
    out[1::2] = mids
    return out


def simulate_extended(model: PlantModel, x0, u_curve, theta, span,
                      cfg: IntegratorConfig | None = None) -> ExtendedTrajectory:
    """Open-loop integration of the extended (x, psi) dynamics from rest psi."""
    x0 = np.atleast_1d(np.asarray(x0, float))
    xbar0 = np.concatenate([x0, np.zeros(model.n * model.p)])
    return project(model, None, u_curve, None, theta, xbar0, cfg, span=span)


def information_of(model: PlantModel, eta: ExtendedTrajectory, theta, sigma,
                   cfg: IntegratorConfig | None = None) -> InfoMatrix:
    """Continuous-time information matrix of an extended trajectory."""
    return fim_continuous(model, eta.state_traj, eta.u, theta, eta.psi_traj, sigma, cfg)


def _objective_parts(model, eta, theta, x_d, weights, sigma, cfg, info=None):
    n = model.n
    x_d_fn = _as_curve(x_d, n)
    q_tau, r_tau = weights.q_tau, weights.r_tau
    track_on = np.any(q_tau) or np.any(r_tau)

    j_track = 0.0
    if track_on:
        def field(t, z):
            x = eta.state(t)
            u = eta.u.eval(t)
            e = x - x_d_fn(t)
            return np.array([0.5 * (e @ q_tau @ e + u @ r_tau @ u)])

        sol = integrate(field, np.zeros(1), (eta.t0, eta.tf), cfg)
        j_track = float(sol.eval(eta.tf)[0])

    j_info = 0.0
    if weights.q_p > 0:
        if info is None:
            info = information_of(model, eta, theta, sigma, cfg)
        lam_min = info.lambda_min
        if lam_min <= _SINGULARITY_REL * max(np.trace(info.matrix), 1.0):
            raise SingularInformation(
                f"objective singular: lambda_min={lam_min:.3e}",
                null_direction=info.right_eigvecs[:, 0].copy(),
            )
        j_info = weights.q_p / lam_min
    return j_info + j_track, info


def objective(model: PlantModel, eta: ExtendedTrajectory, theta, x_d,
              weights: Weights, sigma, cfg: IntegratorConfig | None = None) -> float:
    """Information-plus-tracking objective of a feasible trajectory."""
    value, _ = _objective_parts(model, eta, theta, x_d, weights, sigma, cfg)
    return value


def cost_linearization(model: PlantModel, eta: ExtendedTrajectory, theta, x_d,
                       weights: Weights, sigma,
                       cfg: IntegratorConfig | None = None,
                       info: InfoMatrix | None = None):
    """Running-cost linearizations a(t), b(t) of the objective.

    ``a`` covers the extended state: a tracking block on x plus the
    eigenvalue-sensitivity term propagated through the information
    integrand (its psi block contracts the output Jacobian with the
    minimum eigenpair).  ``b`` is the control-effort derivative.
    Raises :class:`DegenerateEigenvalue` when the minimum eigenvalue of
    the information matrix is not simple.
    """
    n, p = model.n, model.p
    d = n + n * p
    theta = np.asarray(theta, float)
    x_d_fn = _as_curve(x_d, n)
    q_tau, r_tau = weights.q_tau, weights.r_tau

    if weights.q_p > 0:
        if info is None:
            info = information_of(model, eta, theta, sigma, cfg)
        lam, om, nu = min_eigenpair(info)
        if lam <= _SINGULARITY_REL * max(np.trace(info.matrix), 1.0):
            raise SingularInformation(
                f"cost linearization singular: lambda_min={lam:.3e}",
                null_direction=nu.copy(),
            )
        coef = weights.q_p / lam**2
        sig_inv = sigma_inverse(sigma)
    else:
        coef = 0.0

    def a_fn(t):
        x = eta.state(t)
        a = np.zeros(d)
        a[:n] = q_tau @ (x - x_d_fn(t))
        if coef:
            psi = eta.psi(t)
            u = eta.u.eval(t)
            out2 = model.out_second(x, u, theta)
            gam = out2.dx_g @ psi + out2.dth_g
            sg_nu = sig_inv @ (gam @ nu)
            sg_om = sig_inv @ (gam @ om)
            blk = np.outer(out2.dx_g.T @ sg_nu, om) + np.outer(out2.dx_g.T @ sg_om, nu)
            a[n:] = -coef * blk.ravel()
            if np.any(out2.dxx_g) or np.any(out2.dxdth_g):
                dgam = np.einsum("akq,kj->ajq", out2.dxx_g, psi) + out2.dxdth_g
                t1 = np.einsum("ajq,j,a->q", dgam, om, sg_nu)
                t2 = np.einsum("ajq,j,a->q", dgam, nu, sg_om)
                a[:n] -= coef * (t1 + t2)
        return a

    def b_fn(t):
        return r_tau @ eta.u.eval(t)

    return a_fn, b_fn


def _linearizer(model: PlantModel, eta: ExtendedTrajectory, theta):
    """Fused (A(t), B(t)) of the extended dynamics along ``eta``."""
    n, p, m = model.n, model.p, model.m
    d = n + n * p
    theta = np.asarray(theta, float)
    eye_p = np.eye(p)

    def ab(t):
        z = eta.xbar.eval(t)
        x = z[:n]
        psi = z[n:].reshape(n, p)
        u = eta.u.eval(t)
        so = model.second(x, u, theta)
        a_mat = np.zeros((d, d))
        a_mat[:n, :n] = so.dx_f
        blk = np.einsum("ilq,lj->ijq", so.dxx_f, psi) + so.dxdth_f
        a_mat[n:, :n] = blk.reshape(n * p, n)
        a_mat[n:, n:] = np.kron(so.dx_f, eye_p)
        b_mat = np.zeros((d, m))
        b_mat[:n] = so.du_f
        b_blk = np.einsum("ilr,lj->ijr", so.dudx_f, psi) + so.dudth_f
        b_mat[n:] = b_blk.reshape(n * p, m)
        return a_mat, b_mat

    return ab


def dynamics_linearization(model: PlantModel, eta: ExtendedTrajectory, theta):
    """Time-indexed block linearizations (A(t), B(t)) of the extended dynamics."""
    ab = _linearizer(model, eta, theta)
    return (lambda t: ab(t)[0]), (lambda t: ab(t)[1])


def _backward(field_neg, terminal, span, cfg, what):
    """Integrate a terminal-value system; returns eval-in-t dense solution."""
    t0, tf = span
    try:
        sol = integrate(field_neg, terminal, (-tf, -t0), cfg)
    except IntegrationError as exc:
        raise RiccatiBlowup(f"{what} failed: {exc}") from exc
    return sol


def feedback_gain(ab_or_fns, weights_or_qr, span,
                  cfg: IntegratorConfig | None = None,
                  terminal=None) -> DenseTrajectory:
    """Time-varying LQR gain K(t) = R^-1 B(t)' P(t) by backward Riccati.

    ``ab_or_fns`` is either a fused ``t -> (A, B)`` callable or an
    ``(A_fn, B_fn)`` pair; ``weights_or_qr`` is a :class:`Weights` (its
    ``q_k``/``r_k`` are used) or an explicit ``(Q, R)`` pair.  The terminal
    condition defaults to zero (no terminal cost in the objective).
    """
    if isinstance(ab_or_fns, tuple):
        a_fn, b_fn = ab_or_fns
        ab = lambda t: (a_fn(t), b_fn(t))
    else:
        ab = ab_or_fns
    if isinstance(weights_or_qr, Weights):
        q_mat, r_mat = weights_or_qr.q_k, weights_or_qr.r_k
    else:
        q_mat, r_mat = map(np.atleast_2d, weights_or_qr)
    d = q_mat.shape[0]
    pf = np.zeros((d, d)) if terminal is None else np.asarray(terminal, float)

    def field_neg(s, pflat):
        p_mat = pflat.reshape(d, d)
        p_mat = 0.5 * (p_mat + p_mat.T)
        a_mat, b_mat = ab(-s)
        rib_p = np.linalg.solve(r_mat, b_mat.T @ p_mat)
        dp_neg = a_mat.T @ p_mat + p_mat @ a_mat - (p_mat @ b_mat) @ rib_p + q_mat
        return dp_neg.ravel()

    if cfg is None:
        cfg = IntegratorConfig(rel_tol=1e-7, abs_tol=1e-9)
    sol = _backward(field_neg, pf.ravel(), span, cfg, "feedback Riccati")
    ts = -sol.times[::-1]
    kvals = []
    for t in ts:
        p_mat = sol.eval(-t).reshape(d, d)
        _, b_mat = ab(t)
        kvals.append(np.linalg.solve(r_mat, b_mat.T @ (0.5 * (p_mat + p_mat.T))).ravel())
    return DenseTrajectory(ts, np.vstack(kvals), None, "linear")


def project(model: PlantModel, alpha, mu, gain, theta, xbar0,
            cfg: IntegratorConfig | None = None, span=None,
            u_knots_hint=None) -> ExtendedTrajectory:
    """Map a (possibly infeasible) curve onto the dynamics manifold.

    Closed-loop integration of the extended dynamics with
    ``u = mu(t) + K(t) (alpha(t) - xbar(t))``; ``gain=None`` gives the
    open-loop simulation.  Idempotent on feasible input up to integration
    tolerance.  ``u_knots_hint`` adds breakpoints to the stored control so
    piecewise-linear inputs survive the resampling exactly (the breakpoints
    of a ``DenseTrajectory`` ``mu`` are kept automatically).
    """
    n, p, m = model.n, model.p, model.m
    d = n + n * p
    theta = np.asarray(theta, float)
    if span is None:
        if isinstance(mu, DenseTrajectory):
            span = (mu.t0, mu.tf)
        elif isinstance(alpha, DenseTrajectory):
            span = (alpha.t0, alpha.tf)
        else:
            raise ValueError("span required when alpha/mu are bare callables")
    mu_fn = mu.eval if isinstance(mu, DenseTrajectory) else mu
    alpha_fn = alpha.eval if isinstance(alpha, DenseTrajectory) else alpha
    gain_fn = gain.eval if isinstance(gain, DenseTrajectory) else gain

    if gain_fn is None and isinstance(mu, DenseTrajectory):
        # Open loop under a stored control: reuse the curve as-is.
        def open_field(t, z):
            fo = model.first(z[:n], mu.eval(t), theta)
            return np.concatenate(
                [fo.f, (fo.dx_f @ z[n:].reshape(n, p) + fo.dth_f).ravel()])

        xbar = integrate(open_field, xbar0, span, cfg)
        return ExtendedTrajectory(model, xbar, mu, feasible=True)

    def control(t, z):
        u = np.atleast_1d(mu_fn(t))
        if gain_fn is not None:
            u = u + gain_fn(t).reshape(m, d) @ (alpha_fn(t) - z)
        return u

    def closed_field(t, z):
        fo = model.first(z[:n], control(t, z), theta)
        return np.concatenate(
            [fo.f, (fo.dx_f @ z[n:].reshape(n, p) + fo.dth_f).ravel()])

    xbar = integrate(closed_field, xbar0, span, cfg)
    ts = _knots_with_midpoints(xbar.times)
    hints = []
    if isinstance(mu, DenseTrajectory):
        hints.append(mu.times)
    if u_knots_hint is not None:
        hints.append(np.asarray(u_knots_hint, float))
    if hints:
        ts = np.concatenate([ts] + hints)
        ts = np.unique(ts[(ts >= span[0]) & (ts <= span[1])])
    uvals = np.vstack([control(t, xbar.eval(t)) for t in ts])
    u_traj = DenseTrajectory(ts, uvals, None, "linear")
    return ExtendedTrajectory(model, xbar, u_traj, feasible=True)


def descent_direction(a_fn, b_fn, ab, weights: Weights, span,
                      cfg: IntegratorConfig | None = None) -> DescentDirection:
    """Tangent-space minimizer of the local linear-quadratic model.

    Solves  min integral a'zbar + b'v + 1/2 zbar'Q_n zbar + 1/2 v'R_n v dt
    subject to  zbar_dot = A zbar + B v,  zbar(t0) = 0, via a backward
    Riccati/adjoint pass and a forward sweep.  ``dj_zeta`` is the
    directional derivative of the true objective along the result and is
    non-positive.
    """
    if isinstance(ab, tuple):
        a_mat_fn, b_mat_fn = ab
        ab = lambda t: (a_mat_fn(t), b_mat_fn(t))
    q_n, r_n = weights.q_n, weights.r_n
    d = q_n.shape[0]
    m = r_n.shape[0]
    if cfg is None:
        cfg = IntegratorConfig(rel_tol=1e-7, abs_tol=1e-9)

    def back_field(s, z):
        t = -s
        p_mat = z[:d * d].reshape(d, d)
        p_mat = 0.5 * (p_mat + p_mat.T)
        rr = z[d * d:]
        a_mat, b_mat = ab(t)
        a_vec = a_fn(t)
        b_vec = b_fn(t)
        pb = p_mat @ b_mat
        rib_p = np.linalg.solve(r_n, b_mat.T @ p_mat)
        dp_neg = a_mat.T @ p_mat + p_mat @ a_mat - pb @ rib_p + q_n
        acl = a_mat - b_mat @ rib_p
        dr_neg = acl.T @ rr + a_vec - pb @ np.linalg.solve(r_n, b_vec)
        return np.concatenate([dp_neg.ravel(), dr_neg])

    back = _backward(back_field, np.zeros(d * d + d), span, cfg, "descent Riccati")

    def v_of(t, z):
        pr = back.eval(-t)
        p_mat = pr[:d * d].reshape(d, d)
        rr = pr[d * d:]
        _, b_mat = ab(t)
        return -np.linalg.solve(r_n, b_mat.T @ (0.5 * (p_mat + p_mat.T) @ z + rr) + b_fn(t))

    def fwd_field(t, w):
        z = w[:d]
        v = v_of(t, z)
        a_mat, b_mat = ab(t)
        dz = a_mat @ z + b_mat @ v
        return np.concatenate([dz, [a_fn(t) @ z + b_fn(t) @ v]])

    try:
        fwd = integrate(fwd_field, np.zeros(d + 1), span, cfg)
    except IntegrationError as exc:
        raise RiccatiBlowup(f"descent forward sweep failed: {exc}") from exc

    zbar = DenseTrajectory(fwd.times, fwd.values[:, :d], fwd.derivs[:, :d], "hermite")
    ts = _knots_with_midpoints(fwd.times)
    vvals = np.vstack([v_of(t, zbar.eval(t)) for t in ts])
    v_traj = DenseTrajectory(ts, vvals, None, "linear")
    dj = float(fwd.eval(span[1])[d])
    return DescentDirection(zbar=zbar, v=v_traj, dj_zeta=dj)


def armijo_step(model: PlantModel, eta: ExtendedTrajectory, zeta: DescentDirection,
                j_current: float, gain, theta, x_d, weights: Weights, sigma,
                cfg: IntegratorConfig | None = None,
                c1: float = 1e-4, backtrack: float = 0.5,
                max_backtracks: int = 30, gamma_init: float | None = None):
    """Backtracking step with projection; returns (gamma, eta_next, J_next, info).

    A candidate must satisfy J(P(eta + gamma*zeta)) <= J + c1*gamma*dJ.
    Candidates whose projection or objective fails (unstable closed loop,
    singular information) are treated as rejected and the step shrinks.
    The first candidate is scaled so the control perturbation stays within
    a few times the incumbent control's magnitude; near-singular
    information matrices produce descent directions whose unit step would
    drive the plant far outside the region the local model describes.
    """
    dj = zeta.dj_zeta
    if not dj < 0:
        raise LinesearchFailed(f"not a descent direction: dJ={dj:.3e}")
    xbar0 = eta.xbar.eval(eta.t0)
    span = (eta.t0, eta.tf)
    hint = np.union1d(eta.u.times, zeta.v.times)
    # Candidates whose closed loop goes wild would grind through huge step
    # counts before failing; cap their budget relative to the incumbent.
    if cfg is None:
        cfg = IntegratorConfig()
    cand_cfg = replace(cfg, max_steps=max(6 * len(eta.xbar.times), 5_000))
    if gamma_init is None:
        v_inf = float(np.max(np.abs(zeta.v.values)))
        u_cap = max(2.0 * float(np.max(np.abs(eta.u.values))), 1.0)
        gamma_init = min(1.0, u_cap / v_inf) if v_inf > 0 else 1.0
    gamma = gamma_init
    for _ in range(max_backtracks + 1):
        alpha_fn = _combine(eta.xbar, zeta.zbar, gamma)
        mu_fn = _combine(eta.u, zeta.v, gamma)
        try:
            cand = project(model, alpha_fn, mu_fn, gain, theta, xbar0, cand_cfg,
                           span=span, u_knots_hint=hint)
            j_new, info = _objective_parts(model, cand, theta, x_d, weights, sigma, cfg)
        except (IntegrationError, SingularInformation):
            gamma *= backtrack
            continue
        if j_new <= j_current + c1 * gamma * dj:
            return gamma, cand, j_new, info
        gamma *= backtrack
    raise LinesearchFailed(
        f"no sufficient decrease within {max_backtracks} backtracks (dJ={dj:.3e})"
    )


def _combine(base: DenseTrajectory, delta: DenseTrajectory, gamma: float):
    return lambda t: base.eval(t) + gamma * delta.eval(t)


def _feedback_for(model, eta, theta, weights, span, lqr_cfg):
    """Projection gain; uses the reduced state-block Riccati when the
    design weights put zeros on the sensitivity block (the default)."""
    n, p, m = model.n, model.p, model.m
    d = n + n * p
    q_k, r_k = weights.q_k, weights.r_k
    psi_block = q_k[n:, :]
    if not (np.any(psi_block) or np.any(q_k[:n, n:])):
        theta_arr = np.asarray(theta, float)

        def ab_red(t):
            fo = model.first(eta.state(t), eta.u.eval(t), theta_arr)
            return fo.dx_f, fo.du_f

        k_red = feedback_gain(ab_red, (q_k[:n, :n], r_k), span, lqr_cfg)
        kv = np.zeros((len(k_red.times), m * d))
        full = kv.reshape(len(k_red.times), m, d)
        full[:, :, :n] = k_red.values.reshape(-1, m, n)
        return DenseTrajectory(k_red.times, kv, None, "linear")
    return feedback_gain(_linearizer(model, eta, theta), weights, span, lqr_cfg)


def optimize(model: PlantModel, eta0: ExtendedTrajectory, theta, x_d,
             weights: Weights, sigma, tol: float = 1e-1, max_iter: int = 100,
             cfg: IntegratorConfig | None = None,
             lqr_cfg: IntegratorConfig | None = None,
             callback=None) -> OptState:
    """Iterate descent / linesearch / projection until |dJ o zeta| <= tol.

    Returns the final feasible trajectory with a per-iteration trace of
    (J, lambda_min, lambda_max, |dJ|, gamma, wall seconds).  On a failed
    linesearch the best iterate so far is returned with ``converged=False``.
    """
    theta = np.asarray(theta, float)
    span = (eta0.t0, eta0.tf)
    if lqr_cfg is None:
        lqr_cfg = IntegratorConfig(rel_tol=1e-6, abs_tol=1e-9)

    eta = eta0
    j_cur, info = _objective_parts(model, eta, theta, x_d, weights, sigma, cfg)
    trace = []
    gain = None
    converged = False
    reason = ""
    t_start = time.perf_counter()

    for it in range(max_iter + 1):
        a_fn, b_fn = cost_linearization(
            model, eta, theta, x_d, weights, sigma, cfg, info=info)
        ab = _linearizer(model, eta, theta)
        gain = _feedback_for(model, eta, theta, weights, span, lqr_cfg)
        zeta = descent_direction(a_fn, b_fn, ab, weights, span, lqr_cfg)

        lam_min = info.lambda_min if info is not None else np.nan
        lam_max = info.lambda_max if info is not None else np.nan
        wall = time.perf_counter() - t_start
        if abs(zeta.dj_zeta) <= tol:
            trace.append((it, j_cur, lam_min, lam_max, zeta.dj_zeta, 0.0, wall))
            converged = True
            reason = "descent magnitude below tolerance"
            break
        if it == max_iter:
            reason = "max iterations reached"
            break
        try:
            gamma, eta, j_cur, info = armijo_step(
                model, eta, zeta, j_cur, gain, theta, x_d, weights, sigma, cfg)
        except LinesearchFailed as exc:
            trace.append((it, j_cur, lam_min, lam_max, zeta.dj_zeta, 0.0, wall))
            reason = f"linesearch failed: {exc}"
            break
        trace.append((it, j_cur, lam_min, lam_max, zeta.dj_zeta, gamma,
                      time.perf_counter() - t_start))
        if callback is not None:
            callback(trace[-1])

    return OptState(eta=eta, gain=gain, info=info, objective=j_cur,
                    trace=trace, converged=converged, reason=reason)


def perturb_initial(model: PlantModel, eta: ExtendedTrajectory, theta,
                    amplitude: float, frequency: float, sigma,
                    cfg: IntegratorConfig | None = None,
                    threshold: float = 1e-6) -> ExtendedTrajectory:
    """Add a sinusoidal control component and reproject.

    Used to escape zero-information starting trajectories; raises
    :class:`StillSingular` when the perturbed trajectory remains
    unidentifiable (the experiment cannot resolve the parameters for any
    trajectory of this kind).  ``amplitude=0`` returns the input unchanged.
    """
    if amplitude == 0:
        return eta
    base = eta.u

    def mu(t):
        return base.eval(t) + amplitude * np.sin(2 * np.pi * frequency * t)

    xbar0 = eta.xbar.eval(eta.t0)
    out = project(model, None, mu, None, theta, xbar0, cfg, span=(eta.t0, eta.tf))
    info = information_of(model, out, theta, sigma, cfg)
    verdict = identifiability_check(info, threshold)
    if not verdict.identifiable:
        raise StillSingular(
            "perturbed trajectory still yields no information about "
            f"direction {verdict.null_direction}; add sensors or drop a parameter"
        )
    return out
