"""Fisher information matrices, Cramer-Rao bound, and eigenvalue machinery.

Under independent Gaussian output noise with negligible process noise the
information a sampled trajectory carries about the parameters is

    I = sum_i Gamma(t_i)^T Sigma^-1 Gamma(t_i)          (discrete)
    I_cont = integral Gamma(t)^T Sigma^-1 Gamma(t) dt   (continuous)

with Gamma the output-parameter sensitivity.  The continuous form is the
optimizer's objective surrogate; the two converge as the sampling rate
grows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateEigenvalue, SingularCovariance, SingularInformation
from .model import PlantModel
from .numkit import DenseTrajectory, IntegratorConfig, integrate
from .sensitivity import SensitivityBundle

__all__ = [
    "InfoMatrix",
    "fim_discrete",
    "fim_continuous",
    "cramer_rao",
    "min_eigenpair",
    "eig_derivative",
    "identifiability_check",
    "IdentifiabilityResult",
    "sigma_inverse",
]

_SYM_TOL = 1e-10
_PSD_TOL = 1e-10


def sigma_inverse(sigma) -> np.ndarray:
    """Inverse of a symmetric positive-definite covariance."""
    s = np.atleast_2d(np.asarray(sigma, float))
    if s.shape[0] != s.shape[1] or not np.allclose(s, s.T, rtol=1e-12, atol=0):
        raise SingularCovariance("covariance must be square symmetric")
    try:
        ev = np.linalg.eigvalsh(s)
    except np.linalg.LinAlgError as exc:
        raise SingularCovariance(str(exc)) from exc
    if np.min(ev) <= 1e-15 * max(np.max(ev), 1.0):
        raise SingularCovariance("covariance is singular or indefinite")
    return np.linalg.inv(s)


def _signed(vecs: np.ndarray) -> np.ndarray:
    """Fix eigenvector signs: first non-negligible component positive."""
    out = vecs.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        nz = np.flatnonzero(np.abs(col) > 1e-12 * max(np.max(np.abs(col)), 1e-300))
        if nz.size and col[nz[0]] < 0:
            out[:, j] = -col
    return out


@dataclass(frozen=True)
class InfoMatrix:
    """Symmetric PSD Fisher information with a cached eigen-decomposition.

    ``eigvals`` ascend; left and right eigenvectors coincide (symmetry) and
    carry a deterministic sign convention.
    """

    matrix: np.ndarray
    kind: str = "discrete"
    eigvals: np.ndarray = field(init=False)
    left_eigvecs: np.ndarray = field(init=False)
    right_eigvecs: np.ndarray = field(init=False)

    def __post_init__(self):
        mat = np.atleast_2d(np.asarray(self.matrix, float))
        if mat.shape[0] != mat.shape[1]:
            raise ValueError("information matrix must be square")
        scale = max(np.max(np.abs(mat)), 1e-300)
        if np.max(np.abs(mat - mat.T)) > _SYM_TOL * scale:
            raise ValueError("information matrix is not symmetric")
        mat = 0.5 * (mat + mat.T)
        if self.kind not in ("discrete", "continuous"):
            raise ValueError(f"unknown kind {self.kind!r}")
        vals, vecs = np.linalg.eigh(mat)
        lam_max = max(vals[-1], 0.0)
        if vals[0] < -_PSD_TOL * max(lam_max, 1.0):
            raise ValueError(f"information matrix is not PSD: lambda_min={vals[0]:.3e}")
        vecs = _signed(vecs)
        mat.flags.writeable = False
        vals.flags.writeable = False
        vecs.flags.writeable = False
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "eigvals", vals)
        object.__setattr__(self, "left_eigvecs", vecs)
        object.__setattr__(self, "right_eigvecs", vecs)

    @property
    def p(self) -> int:
        return self.matrix.shape[0]

    @property
    def lambda_min(self) -> float:
        return float(self.eigvals[0])

    @property
    def lambda_max(self) -> float:
        return float(self.eigvals[-1])

    def summary(self) -> dict:
        res = identifiability_check(self)
        return {
            "kind": self.kind,
            "eigenvalues": [float(v) for v in self.eigvals],
            "lambda_min": self.lambda_min,
            "lambda_max": self.lambda_max,
            "identifiable": res.identifiable,
            "eigenvalue_ratio": res.ratio,
        }


def _gamma_at(model: PlantModel, x, u, theta) -> callable:
    out = model.out_first(x, u, theta)
    return out.dx_g, out.dth_g


def fim_discrete(model: PlantModel, x_traj, u_traj, theta,
                 psi: SensitivityBundle | DenseTrajectory, times, sigma) -> InfoMatrix:
    """Sampled-information sum over measurement times."""
    sig_inv = sigma_inverse(sigma)
    theta = np.asarray(theta, float)
    n, p = model.n, model.p
    psi_traj = psi.psi_traj if isinstance(psi, SensitivityBundle) else psi
    total = np.zeros((p, p))
    for t in np.asarray(times, float):
        x = x_traj.eval(t)
        u = np.atleast_1d(u_traj(t))
        dx_g, dth_g = _gamma_at(model, x, u, theta)
        gam = dx_g @ psi_traj.eval(t).reshape(n, p) + dth_g
        total += gam.T @ sig_inv @ gam
    return InfoMatrix(total, kind="discrete")


def fim_continuous(model: PlantModel, x_traj, u_traj, theta,
                   psi: SensitivityBundle | DenseTrajectory, sigma,
                   cfg: IntegratorConfig | None = None) -> InfoMatrix:
    """Information integral, quadrature by the adaptive integrator.

    Only the p(p+1)/2 upper-triangle entries ride as quadrature states; the
    integrand is symmetric.
    """
    sig_inv = sigma_inverse(sigma)
    theta = np.asarray(theta, float)
    n, p = model.n, model.p
    psi_traj = psi.psi_traj if isinstance(psi, SensitivityBundle) else psi
    iu, ju = np.triu_indices(p)

    def field(t, z):
        x = x_traj.eval(t)
        u = np.atleast_1d(u_traj(t))
        dx_g, dth_g = _gamma_at(model, x, u, theta)
        gam = dx_g @ psi_traj.eval(t).reshape(n, p) + dth_g
        return (gam.T @ sig_inv @ gam)[iu, ju]

    if cfg is None:
        cfg = IntegratorConfig(rel_tol=1e-8, abs_tol=1e-12)
    sol = integrate(field, np.zeros(len(iu)), (x_traj.t0, x_traj.tf), cfg)
    packed = sol.eval(x_traj.tf)
    mat = np.zeros((p, p))
    mat[iu, ju] = packed
    mat[ju, iu] = packed
    return InfoMatrix(mat, kind="continuous")


def cramer_rao(info: InfoMatrix, threshold: float = 1e-12) -> np.ndarray:
    """Covariance lower bound: the information inverse.

    Raises :class:`SingularInformation` (carrying the null direction) when
    the smallest eigenvalue is below ``threshold`` relative to the largest.
    """
    lam = info.eigvals
    lam_max = max(info.lambda_max, 0.0)
    if lam[0] <= threshold * max(lam_max, 1.0):
        raise SingularInformation(
            f"information singular: lambda_min={lam[0]:.3e}",
            null_direction=info.right_eigvecs[:, 0].copy(),
        )
    v = info.right_eigvecs
    inv = (v / lam) @ v.T
    return 0.5 * (inv + inv.T)


def min_eigenpair(info: InfoMatrix, gap_tol: float = 1e-9):
    """Smallest eigenvalue with unit left/right eigenvectors.

    Raises :class:`DegenerateEigenvalue` when the spectral gap above the
    minimum eigenvalue is below ``gap_tol * max(|lambda_max|, 1)`` -- the
    eigenvector (and hence any derivative built from it) is then ambiguous.
    """
    lam = info.eigvals
    if info.p > 1:
        gap = lam[1] - lam[0]
        if gap < gap_tol * max(abs(info.lambda_max), 1.0):
            raise DegenerateEigenvalue(
                f"minimum eigenvalue not simple: gap {gap:.3e} "
                f"(lambda = {lam[0]:.6e}, {lam[1]:.6e})"
            )
    omega = info.left_eigvecs[:, 0].copy()
    nu = info.right_eigvecs[:, 0].copy()
    return float(lam[0]), omega, nu


def eig_derivative(info: InfoMatrix, dmatrix, omega=None, nu=None) -> float:
    """Directional derivative of a simple eigenvalue:  omega^T dA nu.

    ``dmatrix`` is the derivative of the matrix along the perturbation
    direction.  Eigenvectors default to the minimum pair of ``info``.
    """
    if omega is None or nu is None:
        _, omega, nu = min_eigenpair(info)
    dmatrix = np.asarray(dmatrix, float)
    return float(omega @ dmatrix @ nu)


@dataclass(frozen=True)
class IdentifiabilityResult:
    identifiable: bool
    ratio: float
    null_direction: np.ndarray | None


def identifiability_check(info: InfoMatrix, threshold: float = 1e-6) -> IdentifiabilityResult:
    """Diagnose a (numerically) zero eigenvalue.

    Non-identifiable iff lambda_min / lambda_max < threshold; the returned
    direction is the locally unresolvable parameter combination.
    """
    lam_max = info.lambda_max
    if lam_max <= 0:
        return IdentifiabilityResult(False, 0.0, info.right_eigvecs[:, 0].copy())
    ratio = max(info.lambda_min, 0.0) / lam_max
    if ratio < threshold:
        return IdentifiabilityResult(False, float(ratio), info.right_eigvecs[:, 0].copy())
    return IdentifiabilityResult(True, float(ratio), None)


def info_to_csv_rows(info: InfoMatrix):
    """Row-major CSV rows for the matrix."""
    return [list(row) for row in info.matrix]
