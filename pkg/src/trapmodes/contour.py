"""Closed cross-section contours and their dipole coefficients.

A cylinder cross-section is a smooth closed curve given by a truncated
Fourier series with zero mean,

    X(t) = sum_j cx[j] cos(j t) + sx[j] sin(j t),    j = 1..J
    Y(t) = sum_j cy[j] cos(j t) + sy[j] sin(j t),

so circles and ellipses are J = 1 and derivatives are exact term-by-term
sums. The contour must be simple (no self-intersection) and is stored
positively oriented; with that orientation m(t) = (-Y'(t), X'(t)) points
into the fluid-free interior... here "interior" means into the cylinder,
i.e. m is the inward normal direction times the speed.

The dipole coefficients (mu, kappa, nu) describe the far field of the
exterior potential-flow problems around the section and are the only shape
data the spectral estimates need, together with the area S.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError, ValidationError


@dataclass(frozen=True)
class DipoleStrengths:
    """Far-field dipole coefficients of a section, plus its area.

    mu    : vertical dipole coefficient (flow past the section in y)
    kappa : horizontal dipole coefficient
    nu    : mixed coefficient; zero for sections symmetric about a vertical axis
    S     : cross-section area
    """

    mu: float
    kappa: float
    nu: float
    S: float

    def __post_init__(self):
        if not (self.S > 0.0):
            raise ConsistencyError(f"section area must be positive, got S={self.S}")
        if not (self.mu > 0.0):
            raise ConsistencyError(f"vertical dipole mu must be positive, got {self.mu}")
        if not (0.0 < self.delta < 1.0):
            raise ConsistencyError(
                f"delta = S/(2 pi mu) = {self.delta} outside (0, 1)"
            )

    @property
    def delta(self) -> float:
        return self.S / (2.0 * math.pi * self.mu)


@dataclass(frozen=True)
class Contour:
    """Fourier representation of a simple closed curve, positively oriented."""

    cos_x: np.ndarray
    sin_x: np.ndarray
    cos_y: np.ndarray
    sin_y: np.ndarray
    n_samples: int = 256
    reversed_input: bool = field(default=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.cos_x)

    def _trig(self, t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        j = np.arange(1, self.order + 1, dtype=float)
        jt = np.outer(t, j)
        return np.cos(jt), np.sin(jt), j

    def point(self, t):
        c, s, _ = self._trig(t)
        return c @ self.cos_x + s @ self.sin_x, c @ self.cos_y + s @ self.sin_y

    def velocity(self, t):
        c, s, j = self._trig(t)
        xd = -(s * j) @ self.cos_x + (c * j) @ self.sin_x
        yd = -(s * j) @ self.cos_y + (c * j) @ self.sin_y
        return xd, yd

    def acceleration(self, t):
        c, s, j = self._trig(t)
        j2 = j * j
        xdd = -(c * j2) @ self.cos_x - (s * j2) @ self.sin_x
        ydd = -(c * j2) @ self.cos_y - (s * j2) @ self.sin_y
        return xdd, ydd

    def diameter(self) -> float:
        t = 2.0 * np.pi * np.arange(self.n_samples) / self.n_samples
        x, y = self.point(t)
        return float(
            math.hypot(x.max() - x.min(), y.max() - y.min())
        )


def _signed_area(C: Contour) -> float:
    # trapezoid rule on (1/2) (X Y' - Y X') over one period; exact for a
    # band-limited contour once n_samples > 2 * order
    n = C.n_samples
    t = 2.0 * np.pi * np.arange(n) / n
    x, y = C.point(t)
    xd, yd = C.velocity(t)
    return float(0.5 * (2.0 * np.pi / n) * np.sum(x * yd - y * xd))


def _self_intersects(x, y, tol) -> bool:
    """Proper-crossing test on the sampled closed polyline.

    Sign-product test on all non-adjacent segment pairs, with a small band of
    width ~tol treated as touching. Vectorized over the full pair grid.
    """
    n = len(x)
    px = np.column_stack([x, y])
    a = px
    bpt = np.roll(px, -1, axis=0)
    d = bpt - a  # segment vectors

    def cross(v, w):
        return v[..., 0] * w[..., 1] - v[..., 1] * w[..., 0]

    # pair grid: segment i = (a[i], b[i]), segment j = (a[j], b[j])
    ai = a[:, None, :]
    di = d[:, None, :]
    aj = a[None, :, :]
    dj = d[None, :, :]
    bj = bpt[None, :, :]
    bi = bpt[:, None, :]

    d1 = cross(di, aj - ai)
    d2 = cross(di, bj - ai)
    d3 = cross(dj, ai - aj)
    d4 = cross(dj, bi - aj)

    li = np.linalg.norm(d, axis=1)
    eps = (tol * li[:, None]) * (tol * li[None, :]) + 1e-300
    crossing = (d1 * d2 < eps) & (d3 * d4 < eps)

    idx = np.arange(n)
    adjacent = (
        (idx[:, None] == idx[None, :])
        | ((idx[:, None] + 1) % n == idx[None, :])
        | ((idx[None, :] + 1) % n == idx[:, None])
    )
    crossing &= ~adjacent
    return bool(np.any(crossing))


def make_fourier(cos_x, sin_x, cos_y, sin_y, n_samples: int = 256) -> Contour:
    """Build and validate a contour from its Fourier coefficients.

    Checks, in order: coefficient sanity, nowhere-vanishing speed, simplicity
    of the sampled polyline (tolerance 1e-9 times the diameter), and
    orientation (a clockwise input is reversed in place and flagged).
    """
    arrs = []
    for name, c in (("cos_x", cos_x), ("sin_x", sin_x), ("cos_y", cos_y), ("sin_y", sin_y)):
        arr = np.asarray(c, dtype=float).ravel()
        if arr.size == 0:
            raise ValidationError(f"{name} must contain at least one harmonic")
        if not np.all(np.isfinite(arr)):
            raise ValidationError(f"{name} contains non-finite coefficients")
        arrs.append(arr)
    if len({a.size for a in arrs}) != 1:
        raise ValidationError("all four coefficient arrays must have the same length")
    if n_samples < 8:
        raise ValidationError(f"n_samples too small: {n_samples}")

    C = Contour(*[a.copy() for a in arrs], n_samples=n_samples)
    t = 2.0 * np.pi * np.arange(n_samples) / n_samples
    x, y = C.point(t)
    xd, yd = C.velocity(t)
    speed2 = xd * xd + yd * yd
    diam = C.diameter()
    if diam <= 0.0:
        raise ValidationError("degenerate contour (zero diameter)")
    if np.any(speed2 <= (1e-12 * diam) ** 2):
        raise ValidationError("contour speed vanishes at a sample point")
    if _self_intersects(x, y, 1e-9 * diam):
        raise ValidationError("contour self-intersects")

    if _signed_area(C) < 0.0:
        # t -> -t keeps cos terms and flips sin terms
        C = Contour(
            C.cos_x, -C.sin_x, C.cos_y, -C.sin_y,
            n_samples=n_samples, reversed_input=True,
        )
    return C


def make_circle(r: float, n_samples: int = 256) -> Contour:
    """Circle of radius r centred at the origin."""
    if not (r > 0.0):
        raise ValidationError(f"radius must be positive, got {r}")
    return make_fourier([r], [0.0], [0.0], [r], n_samples=n_samples)


def make_ellipse(a0: float, b0: float, theta0: float = 0.0, n_samples: int = 256) -> Contour:
    """Ellipse with semi-axes a0, b0, the a0 axis tilted by theta0.

    X(t) =  a0 cos t cos th + b0 sin t sin th
    Y(t) = -a0 cos t sin th + b0 sin t cos th

    theta0 is measured clockwise from the positive x axis; this is the
    convention under which the classical dipole formulas carry the sign
    nu = +(a0^2 - b0^2) sin th cos th / 2 (checked against the boundary
    method and an exterior conformal-map solution).
    """
    if not (a0 > 0.0 and b0 > 0.0):
        raise ValidationError(f"semi-axes must be positive, got a0={a0}, b0={b0}")
    ct, st = math.cos(theta0), math.sin(theta0)
    return make_fourier(
        [a0 * ct], [b0 * st], [-a0 * st], [b0 * ct], n_samples=n_samples
    )


def read_fourier_file(path, n_samples: int = 256) -> Contour:
    """Read coefficients from a text file, one harmonic per line:

        cos_x[j] sin_x[j] cos_y[j] sin_y[j]      (j = 1..J, whitespace separated)

    Lines starting with '#' are comments.
    """
    try:
        data = np.loadtxt(path, ndmin=2)
    except Exception as exc:
        raise ValidationError(f"cannot read contour file {path}: {exc}") from exc
    if data.ndim != 2 or data.shape[1] != 4:
        raise ValidationError(
            f"contour file must have 4 columns (cos_x sin_x cos_y sin_y), "
            f"got shape {data.shape}"
        )
    return make_fourier(data[:, 0], data[:, 1], data[:, 2], data[:, 3], n_samples=n_samples)


def area(C: Contour) -> float:
    """Enclosed area by the trapezoid rule (spectrally exact here)."""
    val = _signed_area(C)
    if val <= 0.0:
        raise ConsistencyError(f"non-positive area {val} for a validated contour")
    return val


def normal_and_tangent(C: Contour, t):
    """Return (m, n_hat) at parameter t: m = (-Y', X') and its unit vector.

    For the stored (positive) orientation m points toward the interior of the
    section, i.e. out of the fluid.
    """
    xd, yd = C.velocity(t)
    m = np.stack([-yd, xd], axis=-1)
    speed = np.linalg.norm(m, axis=-1, keepdims=True)
    return m, m / speed


def analytic_dipoles(shape: str, r: float | None = None, a0: float | None = None,
                     b0: float | None = None, theta0: float = 0.0) -> DipoleStrengths:
    """Closed-form dipole coefficients for the canonical sections.

    circle radius r:
        mu = kappa = r^2, nu = 0, S = pi r^2
    ellipse (a0, b0, theta0):
        mu    = (a0^2 cos^2 th + b0^2 sin^2 th + a0 b0) / 2
        kappa = (a0^2 sin^2 th + b0^2 cos^2 th + a0 b0) / 2
        nu    = (a0^2 - b0^2) sin th cos th / 2
        S     = pi a0 b0
    """
    if shape == "circle":
        if r is None or not (r > 0.0):
            raise ValidationError(f"circle needs a positive radius, got {r}")
        return DipoleStrengths(mu=r * r, kappa=r * r, nu=0.0, S=math.pi * r * r)
    if shape == "ellipse":
        if a0 is None or b0 is None or not (a0 > 0.0 and b0 > 0.0):
            raise ValidationError(f"ellipse needs positive semi-axes, got a0={a0}, b0={b0}")
        c2 = math.cos(theta0) ** 2
        s2 = math.sin(theta0) ** 2
        sc = math.sin(theta0) * math.cos(theta0)
        return DipoleStrengths(
            mu=0.5 * (a0 * a0 * c2 + b0 * b0 * s2 + a0 * b0),
            kappa=0.5 * (a0 * a0 * s2 + b0 * b0 * c2 + a0 * b0),
            nu=0.5 * (a0 * a0 - b0 * b0) * sc,
            S=math.pi * a0 * b0,
        )
    raise ValidationError(f"unknown analytic shape {shape!r}")
