"""Adaptive ODE integration with dense output, plus finite-difference oracles.

The integrator is an explicit Dormand-Prince 5(4) embedded pair with
PI step-size control.  Accepted steps become the knots of a
:class:`DenseTrajectory`; dense output between knots is cubic Hermite
built from the stored stage derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    MaxStepsExceeded,
    NonFiniteResult,
    NonFiniteState,
    OutOfDomain,
    StepUnderflow,
)

__all__ = [
    "DenseTrajectory",
    "FunctionCurve",
    "sine_curve",
    "IntegratorConfig",
    "integrate",
    "fd_jacobian",
    "resample_hermite",
]

# Dormand-Prince 5(4) tableau (FSAL: stage 7 equals the next step's stage 1).
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    np.array([]),
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]),
]
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_B4 = np.array(
    [5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40]
)
_E = _B5 - _B4

# Dense-output interpolant coefficients (Shampine); evaluated here only at
# the step midpoint, which is stored as an extra Hermite knot.
_P_DENSE = np.array([
    [1, -8048581381 / 2820520608, 8663915743 / 2820520608, -12715105075 / 11282082432],
    [0, 0, 0, 0],
    [0, 131558114200 / 32700410799, -68118460800 / 10900136933, 87487479700 / 32700410799],
    [0, -1754552775 / 470086768, 14199869525 / 1410260304, -10690763975 / 1880347072],
    [0, 127303824393 / 49829197408, -318862633887 / 49829197408, 701980252875 / 199316789632],
    [0, -282668133 / 205662961, 2019193451 / 616988883, -1453857185 / 822651844],
    [0, 40617522 / 29380423, -110615467 / 29380423, 69997945 / 29380423],
])
_MID_W = _P_DENSE @ np.array([0.5, 0.25, 0.125, 0.0625])


@dataclass(frozen=True)
class IntegratorConfig:
    """Tolerances and step-size limits for :func:`integrate`."""

    rel_tol: float = 1e-8
    abs_tol: float = 1e-10
    h_min: float = 1e-14
    h_max: float = 1.0
    h_init: float = 1e-3
    max_steps: int = 1_000_000

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if not (0 < self.h_min <= self.h_init <= self.h_max):
            raise ValueError("require 0 < h_min <= h_init <= h_max")
        if self.max_steps <= 0:
            raise ValueError("max_steps must be positive")


@dataclass(frozen=True)
class DenseTrajectory:
    """Continuous-time curve stored as knots plus an interpolation rule.

    Knot times are strictly increasing; evaluation at a knot returns the
    stored value exactly.  ``interp`` is ``"hermite"`` (cubic, requires
    ``derivs``) or ``"linear"``.  Instances are immutable and safe to
    share across threads.
    """

    times: np.ndarray
    values: np.ndarray
    derivs: np.ndarray | None = None
    interp: str = "hermite"

    def __post_init__(self):
        times = np.ascontiguousarray(self.times, dtype=float)
        values = np.ascontiguousarray(self.values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        if times.ndim != 1 or len(times) < 1:
            raise ValueError("need at least one knot")
        if values.shape[0] != times.shape[0]:
            raise ValueError("times/values length mismatch")
        if len(times) > 1 and not np.all(np.diff(times) > 0):
            raise ValueError("knot times must be strictly increasing")
        if self.interp not in ("hermite", "linear"):
            raise ValueError(f"unknown interpolation {self.interp!r}")
        derivs = self.derivs
        if self.interp == "hermite":
            if derivs is None:
                raise ValueError("hermite interpolation requires knot derivatives")
            derivs = np.ascontiguousarray(derivs, dtype=float)
            if derivs.ndim == 1:
                derivs = derivs[:, None]
            if derivs.shape != values.shape:
                raise ValueError("derivs shape must match values")
            derivs.flags.writeable = False
        times.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "derivs", derivs)

    @property
    def t0(self) -> float:
        return float(self.times[0])

    @property
    def tf(self) -> float:
        return float(self.times[-1])

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    @classmethod
    def from_samples(cls, times, values, interp="linear", derivs=None):
        return cls(np.asarray(times, float), np.asarray(values, float), derivs, interp)

    @classmethod
    def constant(cls, value, span) -> "DenseTrajectory":
        value = np.atleast_1d(np.asarray(value, float))
        t0, tf = span
        return cls(np.array([t0, tf]), np.vstack([value, value]), None, "linear")

    @classmethod
    def from_function(cls, fn, span, n_knots=257) -> "DenseTrajectory":
        """Sample a callable on a uniform grid as a piecewise-linear curve."""
        ts = np.linspace(span[0], span[1], n_knots)
        vals = np.vstack([np.atleast_1d(fn(t)) for t in ts])
        return cls(ts, vals, None, "linear")

    def _locate(self, t: float) -> int:
        times = self.times
        span = times[-1] - times[0]
        slack = 1e-9 * max(abs(span), 1.0)
        if t < times[0] - slack or t > times[-1] + slack:
            raise OutOfDomain(f"t={t} outside [{times[0]}, {times[-1]}]")
        if len(times) == 1:
            return 0
        i = int(np.searchsorted(times, t, side="right")) - 1
        return min(max(i, 0), len(times) - 2)

    def eval(self, t: float) -> np.ndarray:
        """Interpolated value at time ``t``; exact at knots."""
        i = self._locate(t)
        times = self.times
        if len(times) == 1 or t == times[i]:
            return self.values[i].copy()
        if t == times[i + 1]:
            return self.values[i + 1].copy()
        h = times[i + 1] - times[i]
        s = (t - times[i]) / h
        y0, y1 = self.values[i], self.values[i + 1]
        if self.interp == "linear":
            return y0 + s * (y1 - y0)
        d0, d1 = self.derivs[i], self.derivs[i + 1]
        s2 = s * s
        s3 = s2 * s
        h00 = 2 * s3 - 3 * s2 + 1
        h10 = s3 - 2 * s2 + s
        h01 = -2 * s3 + 3 * s2
        h11 = s3 - s2
        return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1

    __call__ = eval

    def eval_many(self, ts: Sequence[float]) -> np.ndarray:
        return np.vstack([self.eval(t) for t in ts])

    def step_sizes(self) -> np.ndarray:
        return np.diff(self.times)


@dataclass(frozen=True)
class FunctionCurve:
    """Analytic curve over a span; evaluates a callable directly.

    Smooth controls should be passed this way rather than sampled into
    knots: interpolation kinks in a sampled control cap the accuracy an
    adaptive integrator can reach.
    """

    fn: Callable[[float], np.ndarray]
    t0: float
    tf: float

    def eval(self, t: float) -> np.ndarray:
        return np.atleast_1d(np.asarray(self.fn(t), float))

    __call__ = eval

    @property
    def dim(self) -> int:
        return self.eval(self.t0).size

    @property
    def times(self) -> np.ndarray:
        return np.array([self.t0, self.tf])


def _sine_eval(amplitude, frequency, phase, t):
    return np.array([amplitude * np.sin(2.0 * np.pi * frequency * t + phase)])


def sine_curve(amplitude: float, frequency: float, span, phase: float = 0.0) -> FunctionCurve:
    """Single-channel sinusoidal control; picklable for worker processes."""
    import functools

    return FunctionCurve(
        functools.partial(_sine_eval, float(amplitude), float(frequency), float(phase)),
        float(span[0]), float(span[1]),
    )


def resample_hermite(traj, times) -> DenseTrajectory:
    """Resample a curve onto given knots as a C1 cubic-Hermite trajectory.

    Knot slopes come from central differences, so the result smooths away
    the dense first-derivative kinks of a piecewise-linear input (useful
    before handing an optimized control to high-accuracy integrations).
    """
    times = np.asarray(times, float)
    vals = np.vstack([traj.eval(t) for t in times])
    derivs = np.gradient(vals, times, axis=0)
    return DenseTrajectory(times, vals, derivs, "hermite")


def _error_norm(err, y_old, y_new, cfg):
    scale = cfg.abs_tol + cfg.rel_tol * np.maximum(np.abs(y_old), np.abs(y_new))
    return float(np.sqrt(np.mean((err / scale) ** 2)))


def integrate(
    field: Callable[[float, np.ndarray], np.ndarray],
    x0,
    span,
    cfg: IntegratorConfig | None = None,
) -> DenseTrajectory:
    """Integrate ``dx/dt = field(t, x)`` over ``span`` with adaptive steps.

    Returns a Hermite :class:`DenseTrajectory` whose knots are the accepted
    steps.  Raises :class:`StepUnderflow`, :class:`MaxStepsExceeded` or
    :class:`NonFiniteState` on failure.
    """
    if cfg is None:
        cfg = IntegratorConfig()
    t0, tf = float(span[0]), float(span[1])
    if not tf > t0:
        raise ValueError("span must satisfy tf > t0")
    y = np.atleast_1d(np.asarray(x0, dtype=float)).copy()
    if not np.all(np.isfinite(y)):
        raise NonFiniteState("initial state is not finite")

    ts = [t0]
    ys = [y.copy()]
    k1 = np.asarray(field(t0, y), dtype=float)
    if not np.all(np.isfinite(k1)):
        raise NonFiniteState(f"field non-finite at t={t0}")
    fs = [k1.copy()]

    t = t0
    h = min(cfg.h_init, cfg.h_max, tf - t0)
    err_prev = 1.0
    n_steps = 0
    stages = [np.empty_like(y) for _ in range(7)]

    while t < tf:
        if n_steps >= cfg.max_steps:
            raise MaxStepsExceeded(f"exceeded {cfg.max_steps} steps at t={t}")
        n_steps += 1
        h = min(h, tf - t)
        if h < cfg.h_min:
            raise StepUnderflow(f"required step {h:.3e} < h_min at t={t}")

        stages[0] = k1
        for i in range(1, 7):
            yi = y + h * (_A[i] @ np.array(stages[:i]))
            stages[i] = np.asarray(field(t + _C[i] * h, yi), dtype=float)
        ks = np.array(stages)
        y_new = y + h * (_B5 @ ks)
        err_vec = h * (_E @ ks)
        if not np.all(np.isfinite(y_new)):
            raise NonFiniteState(f"state non-finite during step at t={t}")

        err = _error_norm(err_vec, y, y_new, cfg)
        if err <= 1.0:
            t_new = t + h
            k1 = stages[6]  # FSAL
            y_mid = y + h * (_MID_W @ ks)
            t_mid = t + 0.5 * h
            f_mid = np.asarray(field(t_mid, y_mid), dtype=float)
            ts.append(t_mid)
            ys.append(y_mid)
            fs.append(f_mid)
            ts.append(t_new)
            ys.append(y_new.copy())
            fs.append(k1.copy())
            y = y_new
            t = t_new
            # PI controller (Gustafsson): combine current and previous error.
            fac = 0.9 * err ** -0.14 * err_prev ** 0.08 if err > 0 else 5.0
            err_prev = max(err, 1e-10)
            h = min(h * min(5.0, max(0.2, fac)), cfg.h_max)
        else:
            h = h * max(0.2, 0.9 * err ** -0.2)

    return DenseTrajectory(np.array(ts), np.array(ys), np.array(fs), "hermite")


def fd_jacobian(fn: Callable[[np.ndarray], np.ndarray], x, h: float = 1e-6) -> np.ndarray:
    """Central-difference Jacobian of ``fn`` at ``x``; error is O(h^2)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    cols = []
    for j in range(x.size):
        xp = x.copy()
        xm = x.copy()
        xp[j] += h
        xm[j] -= h
        cols.append((np.asarray(fn(xp), float) - np.asarray(fn(xm), float)) / (2 * h))
    jac = np.stack(cols, axis=-1)
    if not np.all(np.isfinite(jac)):
        raise NonFiniteResult("finite-difference Jacobian is not finite")
    return jac
