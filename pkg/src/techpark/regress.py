"""Ordinary least squares for straight lines, parabolas and through-origin fits."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import AllZeroRegressor, DegenerateDesign, InsufficientData, ShareOutOfRange


@dataclass(frozen=True)
class PolyModel:
    """Fitted polynomial ``y = c0 + c1*(x - t_origin) + c2*(x - t_origin)**2``.

    Coefficients are stored lowest order first. ``stderr`` holds the usual
    OLS standard errors, ``sqrt(diag(s^2 (X'X)^-1))`` with
    ``s^2 = SS_res / (n - degree - 1)``.
    """

    degree: int
    coefficients: tuple[float, ...]
    t_origin: float
    r_squared: float
    residuals: tuple[float, ...]
    n_points: int
    stderr: tuple[float, ...]

    def __call__(self, x):
        return predict(self, x)


@dataclass(frozen=True)
class ProportionalModel:
    """Fitted share ``y = d * x`` (no intercept); r^2 is taken about zero."""

    d: float
    r_squared: float
    residuals: tuple[float, ...]
    n_points: int
    stderr: float

    def __call__(self, x):
        return self.d * np.asarray(x, dtype=float)


def _r_squared(ss_res: float, ss_tot: float) -> float:
    if ss_tot == 0.0:
        return 1.0 if ss_res == 0.0 else 0.0
    return float(min(1.0, max(0.0, 1.0 - ss_res / ss_tot)))


def _shift_matrix(degree: int, delta: float, scale: float) -> np.ndarray:
    """Map coefficients in ``u = (z + delta) / scale`` to coefficients in ``z``."""
    m = np.zeros((degree + 1, degree + 1))
    for j in range(degree + 1):
        for i in range(j + 1):
            m[i, j] = comb(j, i) * delta ** (j - i) / scale ** j
    return m


def fit_poly(xs, ys, degree: int, t_origin: float | None = 0.0) -> PolyModel:
    """Least-squares polynomial of degree 1 or 2 in ``x - t_origin``.

    Passing ``t_origin=None`` uses the first x value. The solve itself runs
    on a centred and scaled copy of ``x``, so calendar years or turnover
    figures in the tens of thousands do not spoil the conditioning.
    """
    if degree not in (1, 2):
        raise ValueError(f"degree must be 1 or 2, got {degree}")
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.ndim != 1 or x.shape != y.shape:
        raise ValueError("xs and ys must be 1-D and of equal length")
    n = x.size
    if n < degree + 2:
        raise InsufficientData(f"need at least {degree + 2} points for degree {degree}, got {n}")
    if t_origin is None:
        t_origin = float(x[0])
    z = x - t_origin

    centre = float(z.mean())
    scale = float(np.max(np.abs(z - centre)))
    if scale == 0.0:
        raise DegenerateDesign("all x values are identical")
    u = (z - centre) / scale
    U = np.vander(u, degree + 1, increasing=True)
    coef_u, _, rank, sv = np.linalg.lstsq(U, y, rcond=None)
    if rank < degree + 1 or sv[-1] <= sv[0] * 1e-12:
        raise DegenerateDesign(f"design matrix is singular for degree {degree}")

    shift = _shift_matrix(degree, -centre, scale)
    coef = shift @ coef_u
    # residuals from the well-conditioned basis; re-expanding around a far
    # origin would cancel digits
    resid = y - U @ coef_u
    ss_res = float(resid @ resid)
    ss_tot = float(((y - y.mean()) ** 2).sum())

    dof = n - degree - 1
    cov_u = ss_res / dof * np.linalg.inv(U.T @ U)
    cov = shift @ cov_u @ shift.T
    stderr = np.sqrt(np.clip(np.diag(cov), 0.0, None))

    return PolyModel(
        degree=degree,
        coefficients=tuple(float(c) for c in coef),
        t_origin=t_origin,
        r_squared=_r_squared(ss_res, ss_tot),
        residuals=tuple(float(r) for r in resid),
        n_points=n,
        stderr=tuple(float(s) for s in stderr),
    )


def fit_proportional(S, S_sse) -> ProportionalModel:
    """Through-origin least squares: ``d = sum(S_sse * S) / sum(S**2)``.

    Raises ``ShareOutOfRange`` when the fitted share leaves [0, 1].
    """
    x = np.asarray(S, dtype=float)
    y = np.asarray(S_sse, dtype=float)
    if x.ndim != 1 or x.shape != y.shape:
        raise ValueError("S and S_sse must be 1-D and of equal length")
    if x.size < 1:
        raise InsufficientData("need at least one point")
    sxx = float(x @ x)
    if sxx == 0.0:
        raise AllZeroRegressor("every regressor value is zero")
    d = float(x @ y) / sxx
    if not 0.0 <= d <= 1.0:
        raise ShareOutOfRange(f"fitted share d = {d!r} is outside [0, 1]")
    resid = y - d * x
    ss_res = float(resid @ resid)
    dof = x.size - 1
    stderr = float(np.sqrt(ss_res / dof / sxx)) if dof > 0 else float("nan")
    return ProportionalModel(d=d, r_squared=_r_squared(ss_res, float(y @ y)),
                             residuals=tuple(float(r) for r in resid),
                             n_points=int(x.size), stderr=stderr)


def predict(model: PolyModel, x):
    """Evaluate ``model`` at ``x`` (scalar or array) by Horner's rule."""
    z = np.asarray(x, dtype=float) - model.t_origin
    out = np.zeros_like(z)
    for c in reversed(model.coefficients):
        out = out * z + c
    return float(out) if out.ndim == 0 else out
