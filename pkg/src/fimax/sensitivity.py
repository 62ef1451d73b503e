"""First- and second-order parameter sensitivities along a trajectory.

The state sensitivity ``psi = d x / d theta`` obeys the linear matrix ODE

    psi_dot = dx_f . psi + dth_f,      psi(t0) = 0,

and the second sensitivity ``omega = d2 x / d theta2`` obeys a tensor ODE
sourced by the second derivatives of ``f``.  Both are integrated jointly
with the state in one augmented system, so a single adaptive step
controller governs state and sensitivities alike.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .model import PlantModel
from .numkit import DenseTrajectory, IntegratorConfig, integrate

__all__ = [
    "SensitivityBundle",
    "propagate_first",
    "propagate_second",
    "propagate",
    "output_sensitivity",
    "extended_field",
]


class SensitivityBundle:
    """psi (and optionally omega) trajectories, stored flattened.

    ``psi(t)`` reshapes to (n, p); ``omega(t)`` to (n, p, p).
    """

    def __init__(self, model: PlantModel, psi: DenseTrajectory,
                 omega: DenseTrajectory | None = None):
        self.n = model.n
        self.p = model.p
        self.psi_traj = psi
        self.omega_traj = omega

    def psi(self, t) -> np.ndarray:
        return self.psi_traj.eval(t).reshape(self.n, self.p)

    def omega(self, t) -> np.ndarray:
        if self.omega_traj is None:
            raise ValueError("second-order sensitivities were not propagated")
        return self.omega_traj.eval(t).reshape(self.n, self.p, self.p)


def extended_field(model: PlantModel, u_of_t, theta):
    """Vector field for the augmented (x, psi) system of dimension n + n*p."""
    n, p = model.n, model.p
    theta = np.asarray(theta, float)

    def field(t, z):
        x = z[:n]
        psi = z[n:].reshape(n, p)
        fo = model.first(x, np.atleast_1d(u_of_t(t)), theta)
        dpsi = fo.dx_f @ psi + fo.dth_f
        return np.concatenate([fo.f, dpsi.ravel()])

    return field


def _omega_rate(so, psi, omega):
    # d/dt omega_ijk as sourced by the model's second derivatives.
    t1 = np.tensordot(so.dxx_f, psi, axes=([2], [0]))        # (n, n, p): dxx.psi
    t1 = t1 + so.dthdx_f                                     # + d2f/dx dth
    term_a = np.swapaxes(np.tensordot(t1, psi, axes=([1], [0])), 1, 2)
    term_b = np.tensordot(so.dx_f, omega, axes=([1], [0]))
    term_c = np.tensordot(so.dxdth_f, psi, axes=([2], [0]))
    return term_a + term_b + term_c + so.dthth_f


def _full_field(model: PlantModel, u_of_t, theta):
    """Field for the (x, psi, omega) system of dimension n(1 + p + p^2)."""
    n, p = model.n, model.p
    theta = np.asarray(theta, float)
    n_psi = n * p

    def field(t, z):
        x = z[:n]
        psi = z[n:n + n_psi].reshape(n, p)
        omega = z[n + n_psi:].reshape(n, p, p)
        so = model.second(x, np.atleast_1d(u_of_t(t)), theta)
        dpsi = so.dx_f @ psi + so.dth_f
        domega = _omega_rate(so, psi, omega)
        return np.concatenate([so.f, dpsi.ravel(), domega.ravel()])

    return field


def _slice_traj(traj: DenseTrajectory, lo: int, hi: int) -> DenseTrajectory:
    return DenseTrajectory(traj.times, traj.values[:, lo:hi],
                           traj.derivs[:, lo:hi], "hermite")


def propagate(model: PlantModel, x_traj, u_traj, theta,
              cfg: IntegratorConfig | None = None,
              second_order: bool = False):
    """Integrate the augmented sensitivity system along a trajectory.

    ``x_traj`` supplies the initial state and the span; the state is
    re-integrated jointly with psi (and omega when ``second_order``) so the
    sensitivities see a pointwise-consistent state.  Returns
    ``(x DenseTrajectory, SensitivityBundle)``.
    """
    n, p = model.n, model.p
    span = (x_traj.t0, x_traj.tf)
    x0 = x_traj.eval(span[0])
    if x0.shape != (n,):
        raise DimensionMismatch(f"x_traj dim {x0.shape} != ({n},)")
    n_psi = n * p

    if second_order:
        z0 = np.concatenate([x0, np.zeros(n_psi + n * p * p)])
        sol = integrate(_full_field(model, u_traj, theta), z0, span, cfg)
        omega = _slice_traj(sol, n + n_psi, n + n_psi + n * p * p)
    else:
        z0 = np.concatenate([x0, np.zeros(n_psi)])
        sol = integrate(extended_field(model, u_traj, theta), z0, span, cfg)
        omega = None
    x_out = _slice_traj(sol, 0, n)
    psi = _slice_traj(sol, n, n + n_psi)
    return x_out, SensitivityBundle(model, psi, omega)


def propagate_first(model: PlantModel, x_traj, u_traj, theta,
                    cfg: IntegratorConfig | None = None) -> DenseTrajectory:
    """First-order sensitivity psi as a DenseTrajectory of dimension n*p."""
    _, bundle = propagate(model, x_traj, u_traj, theta, cfg)
    return bundle.psi_traj


def propagate_second(model: PlantModel, x_traj, u_traj, theta, psi=None,
                     cfg: IntegratorConfig | None = None) -> DenseTrajectory:
    """Second-order sensitivity omega as a DenseTrajectory of dimension n*p*p.

    ``psi`` is accepted for interface symmetry; omega is integrated jointly
    with a fresh (x, psi) copy so all three see one step sequence.
    """
    _, bundle = propagate(model, x_traj, u_traj, theta, cfg, second_order=True)
    return bundle.omega_traj


def output_sensitivity(model: PlantModel, x, u, theta, psi_t) -> np.ndarray:
    """Output-parameter sensitivity  Gamma = dx_g . psi + dth_g  (h x p)."""
    psi_t = np.asarray(psi_t, float)
    if psi_t.shape != (model.n, model.p):
        raise DimensionMismatch(f"psi has shape {psi_t.shape}, expected ({model.n}, {model.p})")
    out = model.out_first(np.atleast_1d(x), np.atleast_1d(u), np.asarray(theta, float))
    return out.dx_g @ psi_t + out.dth_g
