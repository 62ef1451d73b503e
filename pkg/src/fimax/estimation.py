"""Batch least-squares parameter estimation and Monte-Carlo studies.

The estimator minimizes the weighted output residual

    beta(theta) = 1/2 sum_i (y_meas(t_i) - y(t_i))^T Sigma^-1 (y_meas(t_i) - y(t_i))

over the parameters, switching between gradient and Newton directions with
an Armijo backtracking linesearch.  Gradient and Hessian come from the
forward sensitivities (psi, omega); the Hessian keeps the full
residual-weighted curvature terms, not just the Gauss-Newton part.
"""

from __future__ import annotations

import concurrent.futures
import functools
from dataclasses import dataclass, field

import numpy as np

from .csvio import fmt, read_csv, write_csv
from .errors import SingularCovariance
from .model import MeasurementNoise, PlantModel
from .numkit import DenseTrajectory, IntegratorConfig, integrate
from .sensitivity import _full_field
from .information import sigma_inverse

__all__ = [
    "MeasurementSet",
    "EstimationResult",
    "MonteCarloResult",
    "ls_cost",
    "ls_derivatives",
    "estimate",
    "synthesize_measurements",
    "monte_carlo",
    "uniform_theta0_sampler",
]

# RNG sub-stream tags (combined with the master seed and trial index).
_STREAM_NOISE = 101
_STREAM_THETA0 = 202


def _as_sigma(sigma) -> np.ndarray:
    if isinstance(sigma, MeasurementNoise):
        return sigma.sigma
    return np.atleast_2d(np.asarray(sigma, float))


@dataclass(frozen=True)
class MeasurementSet:
    """Sampled outputs with their noise covariance."""

    times: np.ndarray
    values: np.ndarray
    sigma: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, float)
        values = np.atleast_2d(np.asarray(self.values, float))
        sigma = _as_sigma(self.sigma)
        if times.ndim != 1 or values.shape[0] != times.shape[0]:
            raise ValueError("times/values mismatch")
        if len(times) > 1 and not np.all(np.diff(times) > 0):
            raise ValueError("measurement times must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise ValueError("measurement values must be finite")
        for a in (times, values, sigma):
            a.flags.writeable = False
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "sigma", sigma)

    def __len__(self) -> int:
        return len(self.times)

    def to_csv(self, path) -> None:
        """Write rows ``t,y1,...,yh`` with round-trip float formatting."""
        h = self.values.shape[1]
        header = ["t"] + [f"y{i + 1}" for i in range(h)]
        write_csv(path, header, np.column_stack([self.times, self.values]))

    @classmethod
    def from_csv(cls, path, sigma) -> "MeasurementSet":
        header, rows = read_csv(path)
        if not header or header[0] != "t":
            raise ValueError(f"unexpected measurement CSV header: {header}")
        data = np.asarray(rows, float)
        return cls(data[:, 0], data[:, 1:], _as_sigma(sigma))


@dataclass
class EstimationResult:
    theta_hat: np.ndarray
    cost_trace: list
    grad_norm_trace: list
    step_kinds: list
    converged: bool
    n_iter: int
    reason: str = ""


def _check_times(meas: MeasurementSet, u_traj):
    if meas.times[0] < u_traj.t0 - 1e-12 or meas.times[-1] > u_traj.tf + 1e-12:
        raise ValueError("measurement times fall outside the control span")


def _simulate_outputs(model, u_traj, x0, theta, times, cfg):
    """Model outputs at sample times from a state-only integration.

    This exact code path is shared by measurement synthesis and by the
    residual evaluations inside the estimator, so noiseless data are
    reproduced bit-for-bit at the true parameters.
    """
    theta = np.asarray(theta, float)

    def fieldfn(t, x):
        return model.f(x, np.atleast_1d(u_traj(t)), theta)

    xt = integrate(fieldfn, x0, (u_traj.t0, u_traj.tf), cfg)
    ys = np.array([
        model.g(xt.eval(t), np.atleast_1d(u_traj(t)), theta) for t in times
    ])
    return ys, xt


def ls_cost(model: PlantModel, u_traj, x0, theta, meas: MeasurementSet,
            cfg: IntegratorConfig | None = None) -> float:
    """Weighted least-squares cost beta(theta)."""
    _check_times(meas, u_traj)
    sig_inv = sigma_inverse(meas.sigma)
    ys, _ = _simulate_outputs(model, u_traj, x0, theta, meas.times, cfg)
    resid = meas.values - ys
    return 0.5 * float(np.einsum("ij,jk,ik->", resid, sig_inv, resid))


def _second_order_terms(out2, psi, omega):
    """d Gamma / d theta as an (h, p, p) tensor at one sample time."""
    t = np.einsum("akm,kj,ml->ajl", out2.dxx_g, psi, psi)
    t += np.einsum("alk,kj->ajl", out2.dxdth_g, psi)
    t += np.einsum("ak,kjl->ajl", out2.dx_g, omega)
    t += np.einsum("ajm,ml->ajl", out2.dxdth_g, psi)
    t += out2.dthth_g
    return t


def ls_derivatives(model: PlantModel, u_traj, x0, theta, meas: MeasurementSet,
                   cfg: IntegratorConfig | None = None):
    """Gradient and Hessian of the least-squares cost at ``theta``.

    The Hessian includes the residual-weighted second-order terms (omega
    and the second output derivatives) and is symmetrized.
    """
    _check_times(meas, u_traj)
    sig_inv = sigma_inverse(meas.sigma)
    theta = np.asarray(theta, float)
    n, p = model.n, model.p

    ys, _ = _simulate_outputs(model, u_traj, x0, theta, meas.times, cfg)

    x0v = np.atleast_1d(np.asarray(x0, float))
    z0 = np.concatenate([x0v, np.zeros(n * p + n * p * p)])
    sol = integrate(_full_field(model, u_traj, theta), z0, (u_traj.t0, u_traj.tf), cfg)

    grad = np.zeros(p)
    hess = np.zeros((p, p))
    for i, t in enumerate(meas.times):
        z = sol.eval(t)
        x = z[:n]
        psi = z[n:n + n * p].reshape(n, p)
        omega = z[n + n * p:].reshape(n, p, p)
        u = np.atleast_1d(u_traj(t))
        out2 = model.out_second(x, u, theta)
        gam = out2.dx_g @ psi + out2.dth_g
        r = meas.values[i] - ys[i]
        sr = sig_inv @ r
        grad -= gam.T @ sr
        hess += gam.T @ sig_inv @ gam
        hess -= np.einsum("a,ajl->jl", sr, _second_order_terms(out2, psi, omega))
    hess = 0.5 * (hess + hess.T)
    return grad, hess


def estimate(model: PlantModel, u_traj, x0, theta0, meas: MeasurementSet,
             tol: float = 1e-8, max_iter: int = 50,
             cfg: IntegratorConfig | None = None,
             c1: float = 1e-4, backtrack: float = 0.5,
             max_backtracks: int = 40) -> EstimationResult:
    """Gradient/Newton batch least squares with Armijo backtracking.

    Newton is used whenever the full Hessian is positive definite
    (Cholesky succeeds); otherwise the step falls back to steepest
    descent.  A failed linesearch terminates with ``converged=False``
    rather than raising, so batch studies survive bad trials.
    """
    theta = np.asarray(theta0, float).copy()
    cost_trace: list[float] = []
    grad_trace: list[float] = []
    kinds: list[str] = []

    def cost(th):
        return ls_cost(model, u_traj, x0, th, meas, cfg)

    beta = cost(theta)
    converged = False
    reason = ""
    n_iter = 0
    for n_iter in range(max_iter + 1):
        grad, hess = ls_derivatives(model, u_traj, x0, theta, meas, cfg)
        gnorm = float(np.linalg.norm(grad))
        cost_trace.append(beta)
        grad_trace.append(gnorm)
        if gnorm <= tol:
            converged = True
            reason = "gradient below tolerance"
            break
        if n_iter == max_iter:
            reason = "max iterations reached"
            break

        kind = "gradient"
        d = -grad
        try:
            np.linalg.cholesky(hess)
            d_newton = -np.linalg.solve(hess, grad)
            if grad @ d_newton < 0:
                d = d_newton
                kind = "newton"
        except np.linalg.LinAlgError:
            pass
        kinds.append(kind)

        slope = float(grad @ d)
        gamma = 1.0
        accepted = False
        for _ in range(max_backtracks + 1):
            cand = theta + gamma * d
            try:
                beta_new = cost(cand)
            except Exception:
                beta_new = np.inf
            if np.isfinite(beta_new) and beta_new <= beta + c1 * gamma * slope:
                accepted = True
                break
            gamma *= backtrack
        if not accepted:
            reason = "linesearch failed"
            break
        theta = cand
        beta = beta_new

    return EstimationResult(
        theta_hat=theta,
        cost_trace=cost_trace,
        grad_norm_trace=grad_trace,
        step_kinds=kinds,
        converged=converged,
        n_iter=n_iter,
        reason=reason,
    )


def _psd_sqrt(sigma: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(sigma)
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.T


def sample_times(span, rate: float) -> np.ndarray:
    """Regular sampling grid: t0 + i/rate for i = 1..floor(T*rate)."""
    t0, tf = span
    count = int(np.floor((tf - t0) * rate + 1e-9))
    return t0 + np.arange(1, count + 1) / rate


def synthesize_measurements(model: PlantModel, u_traj, x0, theta_true,
                            rate: float, sigma, seed,
                            cfg: IntegratorConfig | None = None) -> MeasurementSet:
    """Simulate outputs on a regular grid and add i.i.d. Gaussian noise.

    Deterministic under ``seed``; ``sigma`` may be PSD (zero allowed, in
    which case the samples equal the model outputs exactly).
    """
    if rate <= 0:
        raise ValueError("sampling rate must be positive")
    sigma = _as_sigma(sigma)
    times = sample_times((u_traj.t0, u_traj.tf), rate)
    ys, _ = _simulate_outputs(model, u_traj, x0, theta_true, times, cfg)
    root = _psd_sqrt(sigma)
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal(ys.shape) @ root.T
    return MeasurementSet(times, ys + noise, sigma)


def uniform_theta0_sampler(theta_true, rng, spread: float = 1.0):
    """Initial guess uniformly within +-100%*spread of each true value."""
    theta_true = np.asarray(theta_true, float)
    return theta_true * rng.uniform(1.0 - spread, 1.0 + spread, theta_true.shape)


@dataclass
class MonteCarloResult:
    mean: np.ndarray
    covariance: np.ndarray
    estimates: np.ndarray
    results: list
    n_converged: int
    n_failed: int

    def variances(self) -> np.ndarray:
        return np.diag(self.covariance)


def _run_trial(payload):
    (model, u_traj, x0, theta_true, rate, sigma, seed, k,
     sampler, tol, max_iter, cfg) = payload
    try:
        meas = synthesize_measurements(
            model, u_traj, x0, theta_true, rate, sigma, [seed, _STREAM_NOISE, k], cfg
        )
        rng0 = np.random.default_rng([seed, _STREAM_THETA0, k])
        theta0 = sampler(theta_true, rng0)
        res = estimate(model, u_traj, x0, theta0, meas, tol, max_iter, cfg)
        return {
            "trial": k,
            "theta0": np.asarray(theta0),
            "theta_hat": res.theta_hat,
            "converged": res.converged,
            "n_iter": res.n_iter,
            "beta": res.cost_trace[-1] if res.cost_trace else np.nan,
            "reason": res.reason,
            "error": "",
        }
    except Exception as exc:  # keep the batch alive; report the failure
        return {
            "trial": k, "theta0": None, "theta_hat": None, "converged": False,
            "n_iter": 0, "beta": np.nan, "reason": "exception", "error": str(exc),
        }


def monte_carlo(model: PlantModel, u_traj, x0, theta_true, trials: int,
                rate: float, sigma, seed,
                theta0_sampler=None, tol: float = 1e-5, max_iter: int = 40,
                cfg: IntegratorConfig | None = None,
                workers: int = 1) -> MonteCarloResult:
    """Repeated noisy estimation with per-trial RNG sub-streams.

    Noise and initial-guess draws for trial ``k`` depend only on
    ``(seed, k)``, so results are reproducible regardless of scheduling;
    the sample covariance is taken over converged trials.
    """
    if trials < 2:
        raise ValueError("need at least 2 trials")
    sampler = theta0_sampler if theta0_sampler is not None else uniform_theta0_sampler
    sigma = _as_sigma(sigma)
    payloads = [
        (model, u_traj, x0, np.asarray(theta_true, float), rate, sigma, seed, k,
         sampler, tol, max_iter, cfg)
        for k in range(trials)
    ]
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_trial, payloads))
    else:
        results = [_run_trial(p) for p in payloads]
    results.sort(key=lambda r: r["trial"])

    good = [r["theta_hat"] for r in results if r["converged"]]
    n_failed = sum(1 for r in results if r["error"])
    if len(good) >= 2:
        est = np.vstack(good)
        mean = est.mean(axis=0)
        cov = np.cov(est, rowvar=False, ddof=1)
    else:
        est = np.zeros((0, len(np.atleast_1d(theta_true))))
        mean = np.full(est.shape[1], np.nan)
        cov = np.full((est.shape[1], est.shape[1]), np.nan)
    return MonteCarloResult(
        mean=mean, covariance=np.atleast_2d(cov), estimates=est,
        results=results, n_converged=len(good), n_failed=n_failed,
    )
