"""Embedded trapped modes: the special submergence a* killing the leakage.

For a cylinder in the upper layer the resonance near the embedded cut-off
Lambda2 has Im sigma proportional to Rcal^2 + Jcal^2. A contour symmetric
about the y axis has nu = 0, hence Jcal = 0, and Rcal(a) = 0 then becomes an
equation for the submergence. In the dimensionless variables

    tau0 = tau1 / k,   a0 = k a,   b0 = k b,   w = a0 tau0,
    delta = S / (2 pi mu)  in (0, 1),

the condition Rcal = 0 reduces to the closed form

    tanh w = tau0 (1 + delta) / (tau0^2 + delta),

solvable whenever tau0 > 1 (always true). The mode exists iff the resulting
a* = w/(k tau0) actually fits in the layer, a* < b. For nearly equal layer
densities tau0 ~ 2/alpha is large and a* ~ alpha^2 (1+delta)/(4k) is tiny, so
the mode always exists; as alpha grows, a* crosses b and existence is lost.

Everything here is computed twice on purpose: the closed-form chain above and
a direct bracketed root search on the (rescaled) Rcal(a), which must agree to
fractions of a wavelength or the run aborts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from scipy.optimize import brentq

from .dispersion import (
    ROOT_RTOL,
    FluidConfig,
    SpectralContext,
    g_profile_scaled,
    spectral_context,
)
from .errors import ConsistencyError, ValidationError
from .spectra import ProblemSetup, resonance_upper

SYMMETRY_RTOL = 1e-9  # |nu| <= this * mu counts as symmetric (BEM noise floor)
ROUTE_AGREEMENT = 1e-9  # the two a* routes must match to this * b


@dataclass(frozen=True)
class EmbeddedResult:
    """Outcome of the embedded-mode search for one setup.

    exists      : whether the leading-order embedded mode fits in the layer
    a_star      : the special submergence (None when absent)
    w, tau0     : dimensionless solution variables, w = k a* tau0
    a0, b0      : k a*, k b
    delta       : S / (2 pi mu) of the section
    sigma       : real sigma of the mode (the resonance formula's real part
                  evaluated at a*), None when absent
    diagnostics : which existence condition failed, empty string otherwise
    """

    exists: bool
    a_star: float | None
    w: float
    tau0: float
    a0: float | None
    b0: float
    delta: float
    sigma: float | None
    diagnostics: str = ""


def tau0(cfg: FluidConfig) -> float:
    """Dimensionless threshold root: 1 = alpha t tanh(b0 t) / (1 + beta tanh(b0 t)).

    Solved on its own and cross-checked against tau1/k from the dispersion
    module; the two must agree to 1e-12 relative.
    """
    b0 = cfg.k * cfg.b
    alpha, beta = cfg.alpha, cfg.beta

    def f(t):
        T = math.tanh(b0 * t)
        return alpha * t * T / (1.0 + beta * T) - 1.0

    hi = 2.0
    while f(hi) <= 0.0:
        hi *= 2.0
        if hi > 1e12:  # pragma: no cover
            raise ConsistencyError("failed to bracket tau0")
    t0 = brentq(f, 1.0, hi, rtol=ROOT_RTOL, xtol=1e-15)
    t0_disp = spectral_context(cfg).tau1 / cfg.k
    if abs(t0 - t0_disp) > 1e-12 * t0:
        raise ConsistencyError(
            f"tau0 routes disagree: dimensionless {t0} vs tau1/k {t0_disp}"
        )
    if not (t0 > 1.0):
        raise ConsistencyError(f"tau0 must exceed 1, got {t0}")
    return t0


def solve_w(delta: float, tau0_val: float) -> float:
    """w from tanh w = tau0 (1 + delta) / (tau0^2 + delta)."""
    if not (0.0 < delta < 1.0):
        raise ValidationError(f"delta must lie in (0, 1), got {delta}")
    if not (tau0_val > 1.0):
        raise ValidationError(f"tau0 must exceed 1, got {tau0_val}")
    rhs = tau0_val * (1.0 + delta) / (tau0_val * tau0_val + delta)
    if not (rhs < 1.0):  # (tau0-1)(tau0-delta) > 0 guarantees this
        raise ConsistencyError(f"tanh w = {rhs} >= 1 with tau0={tau0_val}, delta={delta}")
    return math.atanh(rhs)


def _rcal_scaled_at(a: float, tau1: float, cfg: FluidConfig, dip) -> float:
    # e^{-a tau1} Rcal(a); same sign as Rcal, safe for large a tau1
    g_hat, gp_hat = g_profile_scaled(a, tau1, cfg.k)
    return cfg.k * dip.S * g_hat + 2.0 * math.pi * dip.mu * gp_hat


def a_star(setup: ProblemSetup, ctx: SpectralContext | None = None) -> EmbeddedResult:
    """Find the embedded-mode submergence for a symmetric section.

    Route 1 solves the closed dimensionless chain (tau0, w, a* = w/(k tau0));
    route 2 brackets the zero of the rescaled Rcal(a) on (0, b). Both must
    agree on existence, and on the value within 1e-9 b. Asymmetric sections
    (|nu| > 1e-9 mu) cannot support the mode at leading order and return
    exists=False immediately.
    """
    if setup.side != "U":
        raise ValidationError(f"embedded modes arise in problem U, got side {setup.side!r}")
    if ctx is None:
        ctx = spectral_context(setup.cfg)
    cfg = setup.cfg
    k, b = cfg.k, cfg.b
    t0 = ctx.tau1 / k
    if not (t0 > 1.0):
        raise ConsistencyError(f"tau0 must exceed 1, got {t0}")
    delta = setup.dip.delta

    if abs(setup.dip.nu) > SYMMETRY_RTOL * setup.dip.mu:
        w = solve_w(delta, t0)
        return EmbeddedResult(
            exists=False, a_star=None, w=w, tau0=t0, a0=None, b0=k * b,
            delta=delta, sigma=None,
            diagnostics="asymmetric contour (Jcal != 0)",
        )

    w = solve_w(delta, t0)
    a1 = w / (k * t0)
    exists_closed = a1 < b

    # independent route: sign change of the rescaled Rcal on (0, b]
    rc = lambda a: _rcal_scaled_at(a, ctx.tau1, cfg, setup.dip)
    r_at_b = rc(b)
    exists_root = r_at_b < 0.0  # rc(0) = tau1 k (S + 2 pi mu) / ... > 0 always
    if exists_root != exists_closed:
        raise ConsistencyError(
            f"existence disagreement: closed form a*={a1} vs b={b}, "
            f"Rcal(b) scaled = {r_at_b}"
        )
    if not exists_closed:
        return EmbeddedResult(
            exists=False, a_star=None, w=w, tau0=t0, a0=None, b0=k * b,
            delta=delta, sigma=None,
            diagnostics=f"a* = {a1:.6g} >= b = {b:.6g} (mode does not fit in the layer)",
        )

    a2 = brentq(rc, 0.0, b, rtol=ROOT_RTOL, xtol=1e-15 * b)
    if abs(a1 - a2) > ROUTE_AGREEMENT * b:
        raise ConsistencyError(
            f"a* routes disagree: closed form {a1} vs root search {a2}"
        )
    residual = abs(rc(a1))
    scale = max(1.0, k * setup.dip.S * abs(g_profile_scaled(a1, ctx.tau1, k)[0]))
    if residual > 1e-10 * scale:
        raise ConsistencyError(f"Rcal(a*) residual {residual} too large")

    sigma = resonance_upper(replace(setup, a=a1), ctx).re_sigma
    return EmbeddedResult(
        exists=True, a_star=a1, w=w, tau0=t0, a0=k * a1, b0=k * b,
        delta=delta, sigma=sigma,
    )


def f_circle(a: float, tau: float) -> float:
    """Unit-circle embedded-mode function f(a) = 3 tau - (1 + 2 tau^2) tanh(a tau).

    The sign of Rcal(a) for the unit circle at b = k = 1 (delta = 1/2); its
    zero on (0, 1) is a*. Defined on 0 < a <= 1.
    """
    if not (0.0 < a <= 1.0):
        raise ValidationError(f"a must lie in (0, 1], got {a}")
    if not (tau > 0.0):
        raise ValidationError(f"tau must be positive, got {tau}")
    return 3.0 * tau - (1.0 + 2.0 * tau * tau) * math.tanh(a * tau)


def small_alpha_asymptote(alpha: float, delta: float, k: float) -> float:
    """Nearly equal densities: a* ~ alpha^2 (1 + delta) / (4 k)."""
    if not (0.0 <= alpha < 0.2):
        raise ValidationError(f"asymptote valid for alpha < 0.2, got {alpha}")
    if not (0.0 < delta < 1.0):
        raise ValidationError(f"delta must lie in (0, 1), got {delta}")
    if not (k > 0.0):
        raise ValidationError(f"k must be positive, got {k}")
    return alpha * alpha * (1.0 + delta) / (4.0 * k)


def sweep_f(cfgs, a_grid, delta: float = 0.5):
    """Tabulate f(a) for each config (the unit-circle family, b = k = 1).

    Returns one row per (cfg, a) pair as a dict with keys
    alpha, tau0, a, f, has_root, a_star; has_root marks a sign change of f on
    the grid and a_star is the closed-form root location when it exists.
    """
    grid = [float(a) for a in a_grid]
    if len(grid) < 2 or any(g2 <= g1 for g1, g2 in zip(grid, grid[1:])):
        raise ValidationError("a_grid must be strictly increasing with >= 2 points")
    if grid[0] <= 0.0 or grid[-1] > 1.0:
        raise ValidationError(f"a_grid must lie in (0, 1], got [{grid[0]}, {grid[-1]}]")
    rows = []
    for cfg in cfgs:
        t0 = tau0(cfg)
        f_vals = [f_circle(a, t0) for a in grid]
        has_root = any(f1 * f2 < 0.0 for f1, f2 in zip(f_vals, f_vals[1:]))
        w = solve_w(delta, t0)
        a1 = w / (cfg.k * t0)
        a_root = a1 if a1 < cfg.b else None
        for a, f in zip(grid, f_vals):
            rows.append({
                "alpha": cfg.alpha, "tau0": t0, "a": a, "f": f,
                "has_root": has_root, "a_star": a_root,
            })
    return rows


def alpha_threshold(b: float = 1.0, k: float = 1.0, delta: float = 0.5,
                    lo: float = 0.5, hi: float = 0.97, tol: float = 1e-4) -> float:
    """Existence threshold in alpha for the closed-chain family at given delta.

    Bisection on the predicate a*(alpha) < b; embedded modes exist for
    alpha below the returned value. lo must satisfy the predicate and hi must
    violate it.
    """
    if not (0.0 < lo < hi < 1.0):
        raise ValidationError(f"need 0 < lo < hi < 1, got lo={lo}, hi={hi}")
    if not (tol > 0.0):
        raise ValidationError(f"tol must be positive, got {tol}")

    def exists_at(alpha):
        cfg = FluidConfig(beta=1.0 - alpha, b=b, k=k)
        t0 = tau0(cfg)
        return solve_w(delta, t0) / (k * t0) < b

    if not exists_at(lo):
        raise ValidationError(f"no embedded mode at lo={lo}; bracket does not straddle")
    if exists_at(hi):
        raise ValidationError(f"embedded mode still exists at hi={hi}; bracket does not straddle")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if exists_at(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
