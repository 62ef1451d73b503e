"""Plant-model abstraction with the full analytic derivative set.

A :class:`PlantModel` carries the dynamics ``f``, the output map ``g`` and
every first/second partial derivative the downstream linearizations need.
Two builtin models are provided: a scalar linear benchmark and the cart
double-pendulum.  All derivative members are gated by
:func:`validate_derivatives`, which compares them against central finite
differences of the next-lower-order member.

Tensor layouts (shapes implied by state dim n, input dim m, output dim h,
parameter dim p):

========== =========== ==========================================
member     shape       entry
========== =========== ==========================================
dx_f       (n, n)      d f_i / d x_j
dth_f      (n, p)      d f_i / d th_j
du_f       (n, m)      d f_i / d u_j
dxx_f      (n, n, n)   d2 f_i / d x_j d x_k
dthdx_f    (n, n, p)   d2 f_i / d x_j d th_k
dxdth_f    (n, p, n)   d2 f_i / d th_j d x_k
dthth_f    (n, p, p)   d2 f_i / d th_j d th_k
dudx_f     (n, n, m)   d2 f_i / d x_j d u_k
dudth_f    (n, p, m)   d2 f_i / d th_j d u_k
dx_g       (h, n)      d g_i / d x_j
dth_g      (h, p)      d g_i / d th_j
dxx_g      (h, n, n)   d2 g_i / d x_j d x_k
dxdth_g    (h, p, n)   d2 g_i / d th_j d x_k
dthth_g    (h, p, p)   d2 g_i / d th_j d th_k
========== =========== ==========================================
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import _cart_dynamics as _cart
from .errors import DimensionMismatch, NonFiniteResult, ValidationFailed
from .numkit import fd_jacobian

__all__ = [
    "PlantModel",
    "CartDoublePendulumParams",
    "MeasurementNoise",
    "FirstOrder",
    "SecondOrder",
    "OutputFirst",
    "OutputSecond",
    "linear_benchmark",
    "cart_double_pendulum",
    "eval_dynamics",
    "eval_output",
    "validate_derivatives",
]


class FirstOrder(NamedTuple):
    f: np.ndarray
    dx_f: np.ndarray
    dth_f: np.ndarray
    du_f: np.ndarray


class SecondOrder(NamedTuple):
    f: np.ndarray
    dx_f: np.ndarray
    dth_f: np.ndarray
    du_f: np.ndarray
    dxx_f: np.ndarray
    dthdx_f: np.ndarray
    dxdth_f: np.ndarray
    dthth_f: np.ndarray
    dudx_f: np.ndarray
    dudth_f: np.ndarray


class OutputFirst(NamedTuple):
    g: np.ndarray
    dx_g: np.ndarray
    dth_g: np.ndarray


class OutputSecond(NamedTuple):
    g: np.ndarray
    dx_g: np.ndarray
    dth_g: np.ndarray
    dxx_g: np.ndarray
    dxdth_g: np.ndarray
    dthth_g: np.ndarray


@dataclass(frozen=True)
class PlantModel:
    """Immutable bundle of dynamics, outputs and analytic derivatives.

    The ``first``/``second``/``out_first``/``out_second`` methods return
    grouped evaluations; models may supply fused kernels for them via the
    ``eval_*`` fields to avoid recomputing shared subexpressions in hot
    loops.  All callables take ``(x, u, theta)`` with 1-d arrays.
    """

    n: int
    m: int
    h_out: int
    p: int
    f: Callable
    g: Callable
    dx_f: Callable
    dth_f: Callable
    du_f: Callable
    dxx_f: Callable
    dthdx_f: Callable
    dxdth_f: Callable
    dthth_f: Callable
    dudx_f: Callable
    dudth_f: Callable
    dx_g: Callable
    dth_g: Callable
    dxx_g: Callable
    dxdth_g: Callable
    dthth_g: Callable
    name: str = "model"
    theta_nominal: np.ndarray | None = None
    sampler: Callable | None = None
    eval_first: Callable | None = None
    eval_second: Callable | None = None
    eval_out_first: Callable | None = None
    eval_out_second: Callable | None = None

    def first(self, x, u, th) -> FirstOrder:
        if self.eval_first is not None:
            return self.eval_first(x, u, th)
        return FirstOrder(
            self.f(x, u, th), self.dx_f(x, u, th), self.dth_f(x, u, th), self.du_f(x, u, th)
        )

    def second(self, x, u, th) -> SecondOrder:
        if self.eval_second is not None:
            return self.eval_second(x, u, th)
        return SecondOrder(
            self.f(x, u, th),
            self.dx_f(x, u, th),
            self.dth_f(x, u, th),
            self.du_f(x, u, th),
            self.dxx_f(x, u, th),
            self.dthdx_f(x, u, th),
            self.dxdth_f(x, u, th),
            self.dthth_f(x, u, th),
            self.dudx_f(x, u, th),
            self.dudth_f(x, u, th),
        )

    def out_first(self, x, u, th) -> OutputFirst:
        if self.eval_out_first is not None:
            return self.eval_out_first(x, u, th)
        return OutputFirst(self.g(x, u, th), self.dx_g(x, u, th), self.dth_g(x, u, th))

    def out_second(self, x, u, th) -> OutputSecond:
        if self.eval_out_second is not None:
            return self.eval_out_second(x, u, th)
        return OutputSecond(
            self.g(x, u, th),
            self.dx_g(x, u, th),
            self.dth_g(x, u, th),
            self.dxx_g(x, u, th),
            self.dxdth_g(x, u, th),
            self.dthth_g(x, u, th),
        )


def eval_dynamics(model: PlantModel, x, u, theta) -> np.ndarray:
    """Evaluate ``f`` with dimension and finiteness checks."""
    x, u, theta = map(np.atleast_1d, (x, u, theta))
    if x.shape != (model.n,) or u.shape != (model.m,) or theta.shape != (model.p,):
        raise DimensionMismatch(
            f"expected shapes ({model.n},), ({model.m},), ({model.p},); "
            f"got {x.shape}, {u.shape}, {theta.shape}"
        )
    dx = np.asarray(model.f(x, u, theta), float)
    if not np.all(np.isfinite(dx)):
        raise NonFiniteResult(f"dynamics non-finite at x={x}, u={u}, theta={theta}")
    return dx


def eval_output(model: PlantModel, x, u, theta) -> np.ndarray:
    """Evaluate ``g`` with dimension checks."""
    x, u, theta = map(np.atleast_1d, (x, u, theta))
    if x.shape != (model.n,) or u.shape != (model.m,) or theta.shape != (model.p,):
        raise DimensionMismatch(
            f"expected shapes ({model.n},), ({model.m},), ({model.p},); "
            f"got {x.shape}, {u.shape}, {theta.shape}"
        )
    return np.asarray(model.g(x, u, theta), float)


# ---------------------------------------------------------------------------
# measurement noise
# ---------------------------------------------------------------------------

#: Link-angle covariance of the depth-camera tracker, rad^2.
DEFAULT_SIGMA = np.diag([1.12e-4, 4.79e-4])


@dataclass(frozen=True)
class MeasurementNoise:
    """Symmetric positive-definite output covariance."""

    sigma: np.ndarray

    def __post_init__(self):
        s = np.atleast_2d(np.asarray(self.sigma, float))
        if s.shape[0] != s.shape[1]:
            raise ValueError("covariance must be square")
        if not np.allclose(s, s.T, rtol=1e-12, atol=0):
            raise ValueError("covariance must be symmetric")
        if np.any(np.linalg.eigvalsh(s) <= 0):
            raise ValueError("covariance must be positive definite")
        s.flags.writeable = False
        object.__setattr__(self, "sigma", s)

    @classmethod
    def default_cart(cls) -> "MeasurementNoise":
        return cls(DEFAULT_SIGMA.copy())


# ---------------------------------------------------------------------------
# scalar linear benchmark: xdot = theta*x + u, y = x
# ---------------------------------------------------------------------------

def _lin_f(x, u, th):
    return np.array([th[0] * x[0] + u[0]])


def _lin_g(x, u, th):
    return np.array([x[0]])


def _lin_dx_f(x, u, th):
    return np.array([[th[0]]])


def _lin_dth_f(x, u, th):
    return np.array([[x[0]]])


def _lin_du_f(x, u, th):
    return np.array([[1.0]])


def _lin_zero(shape, x, u, th):
    return np.zeros(shape)


def _lin_dthdx_f(x, u, th):
    return np.ones((1, 1, 1))


def _lin_dxdth_f(x, u, th):
    return np.ones((1, 1, 1))


def _lin_dx_g(x, u, th):
    return np.array([[1.0]])


def _lin_sampler(rng):
    x = rng.normal(0.0, 1.0, 1)
    u = rng.normal(0.0, 1.0, 1)
    th = rng.normal(0.5, 1.0, 1)
    return x, u, th


def linear_benchmark() -> PlantModel:
    """Scalar benchmark ``xdot = theta*x + u`` with identity output."""
    return PlantModel(
        n=1, m=1, h_out=1, p=1,
        f=_lin_f, g=_lin_g,
        dx_f=_lin_dx_f, dth_f=_lin_dth_f, du_f=_lin_du_f,
        dxx_f=functools.partial(_lin_zero, (1, 1, 1)),
        dthdx_f=_lin_dthdx_f,
        dxdth_f=_lin_dxdth_f,
        dthth_f=functools.partial(_lin_zero, (1, 1, 1)),
        dudx_f=functools.partial(_lin_zero, (1, 1, 1)),
        dudth_f=functools.partial(_lin_zero, (1, 1, 1)),
        dx_g=_lin_dx_g,
        dth_g=functools.partial(_lin_zero, (1, 1)),
        dxx_g=functools.partial(_lin_zero, (1, 1, 1)),
        dxdth_g=functools.partial(_lin_zero, (1, 1, 1)),
        dthth_g=functools.partial(_lin_zero, (1, 1, 1)),
        name="linear_benchmark",
        theta_nominal=np.array([0.5]),
        sampler=_lin_sampler,
    )


# ---------------------------------------------------------------------------
# cart double pendulum
# ---------------------------------------------------------------------------

#: grams/second -> kg m^2 / s torque coefficient used inside f.
DAMPING_UNIT = 1.0e-3

# State ordering: (x, phi1, phi2, xdot, phi1dot, phi2dot); phi1 is the top
# link's absolute angle from hanging, phi2 the bottom link's angle relative
# to the top link.  The cart acceleration is the control: xddot = u.
_STATE_OF_VAR = (1, 2, 4, 5)  # kernel vars (phi1, phi2, dphi1, dphi2)


@dataclass(frozen=True)
class CartDoublePendulumParams:
    """Measured geometry plus nominal values of the estimated parameters.

    ``m1`` (kg) and ``c`` (g/s, shared by both joints) are the quantities
    the experiment estimates; their fields hold nominal values used when a
    model variant treats them as known.
    """

    m1: float = 0.085
    m2: float = 0.0847
    L1: float = 0.305
    L2: float = 0.305
    w1: float = 0.0445
    w2: float = 0.0381
    bearing_offset: float = 0.0127
    s1: float = 0.146
    s2: float = 0.125
    c: float = 0.50
    gravity: float = 9.81

    def __post_init__(self):
        for name in ("m1", "m2", "L1", "L2", "w1", "w2", "s1", "s2", "gravity"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.c < 0:
            raise ValueError("damping must be non-negative")
        if self.bearing_offset < 0 or 2 * self.bearing_offset >= self.L1:
            raise ValueError("bearing offset incompatible with link length")

    def geom(self) -> tuple:
        return (self.L1, self.L2, self.w1, self.w2, self.bearing_offset,
                self.s1, self.s2, self.gravity)

    def inertia(self, which: int) -> float:
        """Uniform-plate moment of inertia about the link's center of mass."""
        m = self.m1 if which == 1 else self.m2
        L = self.L1 if which == 1 else self.L2
        w = self.w1 if which == 1 else self.w2
        return m * (L**2 + w**2) / 12.0


@dataclass(frozen=True)
class _CartSpec:
    """Maps estimation parameters theta onto kernel args (m1, m2, c_SI)."""

    geom: tuple
    pi0: tuple      # fixed offsets, length 3
    sel: tuple      # rows of the 3 x p selection/scaling matrix

    def __post_init__(self):
        object.__setattr__(self, "_S", np.array(self.sel, float))
        object.__setattr__(self, "_pi0", np.array(self.pi0, float))

    @property
    def S(self) -> np.ndarray:
        return self._S

    def pi(self, th) -> np.ndarray:
        return self._pi0 + self._S @ th


# Fancy-index blocks mapping kernel derivative slots into full state tensors.
_IX_XX = np.ix_([4, 5], [1, 2, 4, 5], [1, 2, 4, 5])
_IX_PIX = np.ix_([4, 5], [1, 2, 4, 5], [0, 1, 2])
_IX_UX = np.ix_([4, 5], [1, 2, 4, 5], [0])


def _cart_f(spec, x, u, th):
    m1, m2, c = map(float, spec.pi(th))
    a = _cart.cart_accel(float(x[1]), float(x[2]), float(x[4]), float(x[5]),
                         float(u[0]), m1, m2, c, spec.geom)
    return np.array([x[3], x[4], x[5], u[0], a[0], a[1]])


def _cart_g(spec, x, u, th):
    return np.array([x[1], x[1] + x[2]])


def _assemble_first(spec, x, u, th):
    m1, m2, c = map(float, spec.pi(th))
    a, d1 = _cart.cart_accel_d1(float(x[1]), float(x[2]), float(x[4]), float(x[5]),
                                float(u[0]), m1, m2, c, spec.geom)
    f = np.array([x[3], x[4], x[5], u[0], a[0], a[1]])
    dxf = np.zeros((6, 6))
    dxf[0, 3] = dxf[1, 4] = dxf[2, 5] = 1.0
    dxf[4:, _STATE_OF_VAR] = d1[:, :4]
    S = spec.S
    dthf = np.zeros((6, S.shape[1]))
    dthf[4:, :] = d1[:, 5:8] @ S
    duf = np.zeros((6, 1))
    duf[3, 0] = 1.0
    duf[4:, 0] = d1[:, 4]
    return FirstOrder(f, dxf, dthf, duf)


def _assemble_second(spec, x, u, th):
    m1, m2, c = map(float, spec.pi(th))
    a, d1, d2 = _cart.cart_core(float(x[1]), float(x[2]), float(x[4]), float(x[5]),
                                float(u[0]), m1, m2, c, spec.geom)
    f = np.array([x[3], x[4], x[5], u[0], a[0], a[1]])
    dxf = np.zeros((6, 6))
    dxf[0, 3] = dxf[1, 4] = dxf[2, 5] = 1.0
    dxf[4:, _STATE_OF_VAR] = d1[:, :4]
    S = spec.S
    p = S.shape[1]
    dthf = np.zeros((6, p))
    dthf[4:, :] = d1[:, 5:8] @ S
    duf = np.zeros((6, 1))
    duf[3, 0] = 1.0
    duf[4:, 0] = d1[:, 4]

    dxxf = np.zeros((6, 6, 6))
    dpidxf = np.zeros((6, 6, 3))
    dpipif = np.zeros((6, 3, 3))
    dudxf = np.zeros((6, 6, 1))
    dupif = np.zeros((6, 3, 1))
    dxxf[_IX_XX] = d2[:, :4, :4]
    dpidxf[_IX_PIX] = d2[:, :4, 5:8]
    dudxf[_IX_UX] = d2[:, :4, 4:5]
    dpipif[4:] = d2[:, 5:8, 5:8]
    dupif[4:, :, 0] = d2[:, 5:8, 4]

    dthdxf = dpidxf @ S                              # (n, n, p)
    dxdthf = np.transpose(dthdxf, (0, 2, 1))         # (n, p, n)
    dththf = np.swapaxes(np.swapaxes(dpipif @ S, 1, 2) @ S, 1, 2)
    dudthf = np.swapaxes(np.swapaxes(dupif, 1, 2) @ S, 1, 2)
    return SecondOrder(f, dxf, dthf, duf, dxxf, dthdxf, dxdthf, dththf, dudxf, dudthf)


def _cart_dx_f(spec, x, u, th):
    return _assemble_first(spec, x, u, th).dx_f


def _cart_dth_f(spec, x, u, th):
    return _assemble_first(spec, x, u, th).dth_f


def _cart_du_f(spec, x, u, th):
    return _assemble_first(spec, x, u, th).du_f


def _cart_second_member(member, spec, x, u, th):
    return getattr(_assemble_second(spec, x, u, th), member)


_CART_DX_G = np.array([[0.0, 1, 0, 0, 0, 0], [0.0, 1, 1, 0, 0, 0]])


def _cart_dx_g(spec, x, u, th):
    return _CART_DX_G.copy()


def _cart_zero(shape_of, spec, x, u, th):
    p = spec.S.shape[1]
    shapes = {"dth_g": (2, p), "dxx_g": (2, 6, 6), "dxdth_g": (2, p, 6),
              "dthth_g": (2, p, p)}
    return np.zeros(shapes[shape_of])


def _cart_out_first(spec, x, u, th):
    p = spec.S.shape[1]
    return OutputFirst(np.array([x[1], x[1] + x[2]]), _CART_DX_G.copy(), np.zeros((2, p)))


def _cart_out_second(spec, x, u, th):
    p = spec.S.shape[1]
    return OutputSecond(
        np.array([x[1], x[1] + x[2]]), _CART_DX_G.copy(), np.zeros((2, p)),
        np.zeros((2, 6, 6)), np.zeros((2, p, 6)), np.zeros((2, p, p)),
    )


def _cart_sampler(rng):
    scale = np.array([0.5, 1.2, 1.2, 0.8, 2.5, 2.5])
    x = rng.normal(0.0, 1.0, 6) * scale
    u = rng.normal(0.0, 2.0, 1)
    th = rng.uniform(0.5, 1.5, 2)
    return x, u, th


def _cart_sampler_scaled(nominal, rng):
    x, u, th = _cart_sampler(rng)
    return x, u, np.asarray(nominal) * th


def cart_double_pendulum(
    params: CartDoublePendulumParams | None = None,
    parameter_set: str = "m1_c",
) -> PlantModel:
    """Cart-driven double pendulum with analytic derivatives.

    ``parameter_set`` selects the estimated parameters theta:

    * ``"m1_c"`` (default): top-link mass (kg) and shared joint damping
      (g/s); the damping is rescaled to SI inside ``f`` so the parameter
      units weight the relative estimation precision.
    * ``"m1_m2"``: both link masses (kg) with damping fixed at the value in
      ``params`` -- the configuration whose masses are unidentifiable when
      undamped.
    """
    if params is None:
        params = CartDoublePendulumParams()
    if parameter_set == "m1_c":
        spec = _CartSpec(
            geom=params.geom(),
            pi0=(0.0, params.m2, 0.0),
            sel=((1.0, 0.0), (0.0, 0.0), (0.0, DAMPING_UNIT)),
        )
        nominal = np.array([params.m1, params.c])
    elif parameter_set == "m1_m2":
        spec = _CartSpec(
            geom=params.geom(),
            pi0=(0.0, 0.0, DAMPING_UNIT * params.c),
            sel=((1.0, 0.0), (0.0, 1.0), (0.0, 0.0)),
        )
        nominal = np.array([params.m1, params.m2])
    else:
        raise ValueError(f"unknown parameter_set {parameter_set!r}")

    part = functools.partial
    return PlantModel(
        n=6, m=1, h_out=2, p=2,
        f=part(_cart_f, spec), g=part(_cart_g, spec),
        dx_f=part(_cart_dx_f, spec),
        dth_f=part(_cart_dth_f, spec),
        du_f=part(_cart_du_f, spec),
        dxx_f=part(_cart_second_member, "dxx_f", spec),
        dthdx_f=part(_cart_second_member, "dthdx_f", spec),
        dxdth_f=part(_cart_second_member, "dxdth_f", spec),
        dthth_f=part(_cart_second_member, "dthth_f", spec),
        dudx_f=part(_cart_second_member, "dudx_f", spec),
        dudth_f=part(_cart_second_member, "dudth_f", spec),
        dx_g=part(_cart_dx_g, spec),
        dth_g=part(_cart_zero, "dth_g", spec),
        dxx_g=part(_cart_zero, "dxx_g", spec),
        dxdth_g=part(_cart_zero, "dxdth_g", spec),
        dthth_g=part(_cart_zero, "dthth_g", spec),
        name=f"cart_double_pendulum[{parameter_set}]",
        theta_nominal=nominal,
        sampler=part(_cart_sampler_scaled, tuple(nominal)),
        eval_first=part(_assemble_first, spec),
        eval_second=part(_assemble_second, spec),
        eval_out_first=part(_cart_out_first, spec),
        eval_out_second=part(_cart_out_second, spec),
    )


def cart_energy(params: CartDoublePendulumParams, x, theta=None,
                parameter_set: str = "m1_c"):
    """Kinetic and potential energy ``(T, V)`` of the cart model at state x.

    ``theta`` optionally overrides the estimated parameters the same way the
    corresponding model variant would.
    """
    m1, m2 = params.m1, params.m2
    if theta is not None:
        if parameter_set == "m1_c":
            m1 = theta[0]
        else:
            m1, m2 = theta[0], theta[1]
    return _cart.cart_energy(x[1], x[2], x[4], x[5], x[3], m1, m2, params.geom())


# ---------------------------------------------------------------------------
# derivative validation
# ---------------------------------------------------------------------------

_F_CHECKS = [
    # (name, member to check, base member, argument differentiated)
    ("dx_f", "dx_f", "f", "x"),
    ("dth_f", "dth_f", "f", "th"),
    ("du_f", "du_f", "f", "u"),
    ("dxx_f", "dxx_f", "dx_f", "x"),
    ("dthdx_f", "dthdx_f", "dx_f", "th"),
    ("dxdth_f", "dxdth_f", "dth_f", "x"),
    ("dthth_f", "dthth_f", "dth_f", "th"),
    ("dudx_f", "dudx_f", "dx_f", "u"),
    ("dudth_f", "dudth_f", "dth_f", "u"),
    ("dx_g", "dx_g", "g", "x"),
    ("dth_g", "dth_g", "g", "th"),
    ("dxx_g", "dxx_g", "dx_g", "x"),
    ("dxdth_g", "dxdth_g", "dth_g", "x"),
    ("dthth_g", "dthth_g", "dth_g", "th"),
]


def _default_sampler(model, rng):
    x = rng.normal(0.0, 1.0, model.n)
    u = rng.normal(0.0, 1.0, model.m)
    if model.theta_nominal is not None:
        th = model.theta_nominal * rng.uniform(0.5, 1.5, model.p)
    else:
        th = rng.normal(0.0, 1.0, model.p)
    return x, u, th


def validate_derivatives(
    model: PlantModel,
    samples: int = 20,
    seed: int = 0,
    rel_tol: float = 1e-4,
    fd_step: float = 1e-6,
) -> dict:
    """Cross-check every analytic derivative against finite differences.

    Each second-order member is differenced from the analytic first-order
    member (never fd-of-fd).  Returns a dict of per-member worst relative
    errors; raises :class:`ValidationFailed` naming the first member whose
    error exceeds ``rel_tol``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    worst = {name: 0.0 for name, *_ in _F_CHECKS}

    def rel_err(analytic, fd):
        denom = max(np.max(np.abs(analytic)), np.max(np.abs(fd)))
        if denom < 1e-9:
            return 0.0
        return float(np.max(np.abs(analytic - fd)) / denom)

    for k in range(samples):
        if model.sampler is not None:
            x, u, th = model.sampler(rng)
        else:
            x, u, th = _default_sampler(model, rng)
        for name, member, base, wrt in _F_CHECKS:
            analytic = np.asarray(getattr(model, member)(x, u, th), float)
            base_fn = getattr(model, base)

            if wrt == "x":
                fn = lambda v: np.asarray(base_fn(v, u, th), float).ravel()
                at = x
            elif wrt == "u":
                fn = lambda v: np.asarray(base_fn(x, v, th), float).ravel()
                at = u
            else:
                fn = lambda v: np.asarray(base_fn(x, u, v), float).ravel()
                at = th
            fd = fd_jacobian(fn, at, fd_step).reshape(analytic.shape)

            err = rel_err(analytic, fd)
            worst[name] = max(worst[name], err)
            if err > rel_tol:
                raise ValidationFailed(
                    f"{name} disagrees with finite differences "
                    f"(rel err {err:.3e} > {rel_tol:.1e}) at sample {k}: "
                    f"x={x}, u={u}, theta={th}"
                )
    return worst
