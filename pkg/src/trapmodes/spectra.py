"""Leading-order trapped-mode eigenvalues and resonances for a thin cylinder.

A horizontal cylinder of thin cross-section (thinness parameter eps) lies in
the upper layer at depth a below the free surface (problem U) or in the lower
layer at depth a below the interface (problem L). Waves travel obliquely with
axial wavenumber k. Near each cut-off of the continuous spectrum the cylinder
produces, at leading order in eps:

  * below the lower cut-off Lambda1: a real eigenvalue lam = Lambda1 (1 - sigma^2)
    with sigma of order eps^2 (a trapped mode, both problems);
  * near the embedded cut-off Lambda2: a resonance lam = Lambda2 (1 - sigma^2)
    with Re sigma of order eps^2 and Im sigma of order eps^4. For problem U
    the imaginary part is proportional to Rcal^2 + Jcal^2 and can vanish
    (an embedded trapped mode, see the embedded module); for problem L it is
    strictly positive, the mode always leaks.

All results are leading order only; the omitted remainders are O(eps^3 ln eps)
for trapped modes and O(eps^5 ln eps) for resonances. Each result carries an
`order` tag so this cannot be mistaken for a full series evaluation.

Exponentials are the numerical hazard here: the constants pair growing
profiles cosh(a tau1) with decaying factors e^{-2 b tau1}, and tau1 ~ 2k/alpha
blows up for nearly equal densities. All such products are evaluated with the
exponents combined analytically (see g_profile_scaled), never as inf * 0.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace

from .contour import DipoleStrengths
from .dispersion import (
    FluidConfig,
    SpectralContext,
    g_profile,
    g_profile_scaled,
    lambda1_prime,
    spectral_context,
)
from .errors import ConsistencyError, ValidationError

EPSILON_VALIDITY = 0.1
NEAR_EMBEDDED_RTOL = 1e-14


@dataclass(frozen=True)
class ProblemSetup:
    """One cylinder configuration.

    side : 'U' (upper layer, a measured from the free surface, a < b)
           or 'L' (lower layer, a measured down from the interface)
    a    : submergence of the cylinder center, > 0
    epsilon : thinness parameter; the section is eps times the unit contour
    dip  : dipole strengths and area of the unit contour
    """

    cfg: FluidConfig
    side: str
    a: float
    epsilon: float
    dip: DipoleStrengths

    def __post_init__(self):
        if self.side not in ("U", "L"):
            raise ValidationError(f"side must be 'U' or 'L', got {self.side!r}")
        if not (self.a > 0.0):
            raise ValidationError(f"submergence a must be positive, got {self.a}")
        if self.side == "U" and not (self.a < self.cfg.b):
            raise ValidationError(
                f"problem U requires a < b (cylinder inside the upper layer), "
                f"got a={self.a}, b={self.cfg.b}"
            )
        if not (self.epsilon > 0.0):
            raise ValidationError(f"epsilon must be positive, got {self.epsilon}")
        if self.epsilon > EPSILON_VALIDITY:
            warnings.warn(
                f"epsilon={self.epsilon} is large for a leading-order asymptotic "
                f"result (heuristic validity bound {EPSILON_VALIDITY})",
                stacklevel=2,
            )


@dataclass(frozen=True)
class Coefficients:
    """Positive constants of the leading-order formulas, kept for diagnostics."""

    D: float
    D1: float | None = None
    Q_at: dict = field(default_factory=dict)
    P0_at: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ModeResult:
    sigma: float
    lam: float
    threshold: float
    omega: float | None = None
    order: str = "leading"
    coefficients: Coefficients | None = None


@dataclass(frozen=True)
class ResonanceResult:
    re_sigma: float
    im_sigma: float
    rcal: float
    jcal: float
    near_embedded: bool = False
    decay_rate: float | None = None
    order: str = "leading"
    coefficients: Coefficients | None = None


def q_factor(tau: float, cfg: FluidConfig) -> float:
    """Q(tau) = (2/(beta tau^2)) e^{-b tau} (cosh b tau + beta sinh b tau).

    Evaluated as ((1+beta) + alpha e^{-2 b tau}) / (beta tau^2), the same
    quantity without the overflowing cosh. Strictly positive.
    """
    if not (tau > 0.0):
        raise ValidationError(f"tau must be positive, got {tau}")
    return ((1.0 + cfg.beta) + cfg.alpha * math.exp(-2.0 * cfg.b * tau)) / (
        cfg.beta * tau * tau
    )


def p0_factor(tau: float, lam: float, cfg: FluidConfig) -> float:
    """P0(tau, lam) = [(1 - beta T)/(1 + beta T)] (lam + tau) (lam - alpha tau T / (1 - beta T)),
    T = tanh(b tau). Sign varies with lam; recorded raw, never folded away.
    """
    if not (tau > 0.0):
        raise ValidationError(f"tau must be positive, got {tau}")
    T = math.tanh(cfg.b * tau)
    one_minus = 1.0 - cfg.beta * T  # > 0 since beta < 1
    one_plus = 1.0 + cfg.beta * T
    return (one_minus / one_plus) * (lam + tau) * (lam - cfg.alpha * tau * T / one_minus)


def _require_side(setup: ProblemSetup, side: str, what: str):
    if setup.side != side:
        raise ValidationError(f"{what} is defined for problem {side}, got side {setup.side!r}")


def _ctx_for(setup: ProblemSetup, ctx: SpectralContext | None) -> SpectralContext:
    if ctx is None:
        return spectral_context(setup.cfg)
    if ctx.cfg != setup.cfg:
        raise ValidationError("ctx was built for a different FluidConfig")
    return ctx


def rcal_jcal(setup: ProblemSetup, ctx: SpectralContext | None = None):
    """Rcal and Jcal, the two obstruction integrals of the problem-U resonance.

    Rcal = k S g(-a; tau1, Lambda2) + 2 pi mu g'(-a; tau1, Lambda2)
    Jcal = 2 pi nu sqrt(tau1^2 - k^2) g(-a; tau1, Lambda2)

    Im sigma is proportional to Rcal^2 + Jcal^2; both vanishing is the
    embedded-mode condition. Values are returned raw; they grow like
    e^{a tau1} and saturate to a signed infinity once out of double range
    (the resonance formula itself always uses the rescaled finite pair).
    """
    _require_side(setup, "U", "rcal_jcal")
    ctx = _ctx_for(setup, ctx)
    r_hat, j_hat, _ = _rcal_jcal_scaled(setup, ctx)
    try:
        scale = math.exp(setup.a * ctx.tau1)
    except OverflowError:
        scale = math.inf

    def rescale(v):
        return 0.0 if v == 0.0 else v * scale

    return rescale(r_hat), rescale(j_hat)


def _rcal_jcal_scaled(setup: ProblemSetup, ctx: SpectralContext):
    # e^{-a tau1}-scaled pair; finite for arbitrarily large a*tau1
    k = setup.cfg.k
    g_hat, gp_hat = g_profile_scaled(setup.a, ctx.tau1, ctx.Lambda2)
    r_hat = k * setup.dip.S * g_hat + 2.0 * math.pi * setup.dip.mu * gp_hat
    j_hat = 2.0 * math.pi * setup.dip.nu * ctx.p1_zero * g_hat
    return r_hat, j_hat, g_hat


def trapped_upper(setup: ProblemSetup, ctx: SpectralContext | None = None,
                  g_grav: float | None = None) -> ModeResult:
    """Trapped mode below Lambda1 for a cylinder in the upper layer.

    sigma = 2 eps^2 D e^{-bk} ( S g^2 + 2 pi mu k^{-2} g'^2 ),  g at (-a; k, Lambda1),
    D = (alpha/beta) e^{-bk} / ( Q(k) lambda1'(k) (Lambda2 - Lambda1) q1 ),
    q1 = sqrt( 2 k Lambda1 / lambda1'(k) ),
    and the eigenvalue is lam = Lambda1 (1 - sigma^2).
    """
    _require_side(setup, "U", "trapped_upper")
    ctx = _ctx_for(setup, ctx)
    cfg = setup.cfg
    k, b, a = cfg.k, cfg.b, setup.a
    Lam1, Lam2 = ctx.Lambda1, ctx.Lambda2
    dl1 = ctx.dlam1_k
    q1 = math.sqrt(2.0 * k * Lam1 / dl1)
    Qk = q_factor(k, cfg)
    core = (cfg.alpha / cfg.beta) / (Qk * dl1 * (Lam2 - Lam1) * q1)
    D = core * math.exp(-b * k)
    if not (D > 0.0):
        raise ConsistencyError(f"coefficient D must be positive, got {D}")
    g_hat, gp_hat = g_profile_scaled(a, k, Lam1)
    # sigma = 2 eps^2 D e^{-bk} (S g^2 + 2 pi mu g'^2 / k^2); the two e^{-bk}
    # and the e^{2ak} hidden in g^2 are combined into one exponent (a < b)
    shape = setup.dip.S * g_hat * g_hat + (
        2.0 * math.pi * setup.dip.mu / (k * k)
    ) * gp_hat * gp_hat
    sigma = 2.0 * setup.epsilon**2 * core * math.exp(2.0 * (a - b) * k) * shape
    if not (sigma > 0.0):
        raise ConsistencyError(f"trapped-mode sigma must be positive, got {sigma}")
    lam = Lam1 * (1.0 - sigma * sigma)
    omega = math.sqrt(g_grav * lam) if g_grav is not None else None
    coeffs = Coefficients(D=D, Q_at={k: Qk})
    return ModeResult(sigma=sigma, lam=lam, threshold=Lam1, omega=omega,
                      coefficients=coeffs)


def resonance_upper(setup: ProblemSetup, ctx: SpectralContext | None = None,
                    g_grav: float | None = None) -> ResonanceResult:
    """Resonance near the embedded cut-off Lambda2, cylinder in the upper layer.

    Re sigma = (eps^2/2) D k^2 e^{-ak} (S + 2 pi mu),
        D = 4 e^{-ak} / ( Q(k) (Lambda2 - Lambda1) q2 ),  q2 = k sqrt(2)
    Im sigma = eps^4 (alpha k / (beta tau1^3)) D D1 e^{-ak - 2b tau1} (Rcal^2 + Jcal^2),
        D1 = Lambda2 tau1 / ( Q(tau1) lambda1'(tau1) p1_zero (tau1 - Lambda2) )

    When Rcal^2 + Jcal^2 is numerically negligible the result is flagged
    near_embedded: the resonance formula's hypothesis fails there and the
    embedded module is the right tool.
    """
    _require_side(setup, "U", "resonance_upper")
    ctx = _ctx_for(setup, ctx)
    cfg = setup.cfg
    k, b, a = cfg.k, cfg.b, setup.a
    Lam1, Lam2, tau1 = ctx.Lambda1, ctx.Lambda2, ctx.tau1
    q2 = k * math.sqrt(2.0)
    Qk = q_factor(k, cfg)
    core = 4.0 / (Qk * (Lam2 - Lam1) * q2)
    D = core * math.exp(-a * k)
    D1 = Lam2 * tau1 / (q_factor(tau1, cfg) * ctx.dlam1_tau1 * ctx.p1_zero * (tau1 - Lam2))
    if not (D > 0.0 and D1 > 0.0):
        raise ConsistencyError(f"resonance constants must be positive: D={D}, D1={D1}")
    re_sigma = 0.5 * setup.epsilon**2 * core * k * k * math.exp(-2.0 * a * k) * (
        setup.dip.S + 2.0 * math.pi * setup.dip.mu
    )
    r_hat, j_hat, g_hat = _rcal_jcal_scaled(setup, ctx)
    # e^{-2 b tau1} (Rcal^2 + Jcal^2) = e^{-2 (b-a) tau1} (r_hat^2 + j_hat^2), b > a
    obstruction = r_hat * r_hat + j_hat * j_hat
    im_sigma = (
        setup.epsilon**4
        * (cfg.alpha * k / (cfg.beta * tau1**3))
        * core
        * D1
        * math.exp(-2.0 * a * k - 2.0 * (b - a) * tau1)
        * obstruction
    )
    near_embedded = obstruction <= NEAR_EMBEDDED_RTOL * (k * setup.dip.S * g_hat) ** 2
    if not (re_sigma > 0.0) or im_sigma < 0.0:
        raise ConsistencyError(
            f"resonance parts out of range: re={re_sigma}, im={im_sigma}"
        )
    rcal, jcal = rcal_jcal(setup, ctx)
    decay = math.sqrt(k * g_grav) * re_sigma * im_sigma if g_grav is not None else None
    coeffs = Coefficients(D=D, D1=D1, Q_at={k: Qk, tau1: q_factor(tau1, cfg)})
    return ResonanceResult(re_sigma=re_sigma, im_sigma=im_sigma, rcal=rcal, jcal=jcal,
                           near_embedded=near_embedded, decay_rate=decay,
                           coefficients=coeffs)


def trapped_lower(setup: ProblemSetup, ctx: SpectralContext | None = None,
                  g_grav: float | None = None) -> ModeResult:
    """Trapped mode below Lambda1 for a cylinder in the lower layer.

    sigma = (eps^2/2) D e^{-ak} k (S + 2 pi mu),
    D = -e^{-ak} P0(k, Lambda1) (Lambda2 - Lambda1)^{-1} k / (q1 lambda1'(k)).
    P0(k, Lambda1) < 0, so D > 0; a sign flip here means a bug, not physics.
    """
    _require_side(setup, "L", "trapped_lower")
    ctx = _ctx_for(setup, ctx)
    cfg = setup.cfg
    k, a = cfg.k, setup.a
    Lam1, Lam2 = ctx.Lambda1, ctx.Lambda2
    dl1 = ctx.dlam1_k
    q1 = math.sqrt(2.0 * k * Lam1 / dl1)
    P0 = p0_factor(k, Lam1, cfg)
    core = -P0 * k / ((Lam2 - Lam1) * q1 * dl1)
    D = core * math.exp(-k * a)
    if not (D > 0.0):
        raise ConsistencyError(
            f"coefficient D must be positive, got {D} (P0(k,Lambda1)={P0})"
        )
    sigma = 0.5 * setup.epsilon**2 * core * math.exp(-2.0 * a * k) * k * (
        setup.dip.S + 2.0 * math.pi * setup.dip.mu
    )
    if not (sigma > 0.0):
        raise ConsistencyError(f"trapped-mode sigma must be positive, got {sigma}")
    lam = Lam1 * (1.0 - sigma * sigma)
    omega = math.sqrt(g_grav * lam) if g_grav is not None else None
    coeffs = Coefficients(D=D, Q_at={}, P0_at={(k, Lam1): P0})
    return ModeResult(sigma=sigma, lam=lam, threshold=Lam1, omega=omega,
                      coefficients=coeffs)


def resonance_lower(setup: ProblemSetup, ctx: SpectralContext | None = None,
                    g_grav: float | None = None) -> ResonanceResult:
    """Resonance near Lambda2 for a cylinder in the lower layer; always leaky.

    Re sigma = (eps^2/2) D e^{-ak} k (S + 2 pi mu),
        D = e^{-ak} P0(k, Lambda2) k / ((Lambda2 - Lambda1) q2)
    Im sigma = (eps^4/4) (k/tau1) D D1 e^{-2 a tau1 - ak}
               ( (k S + 2 pi tau1 mu)^2 + (2 pi nu)^2 (tau1^2 - k^2) ),
        D1 = -P0(tau1, Lambda2) tau1 / ((tau1 - k) lambda1'(tau1) p1_zero)

    The bracket is bounded below by (k S)^2 > 0, so Im sigma > 0: the lower
    cylinder's resonance never becomes a trapped mode.
    """
    _require_side(setup, "L", "resonance_lower")
    ctx = _ctx_for(setup, ctx)
    cfg = setup.cfg
    k, a = cfg.k, setup.a
    Lam1, Lam2, tau1 = ctx.Lambda1, ctx.Lambda2, ctx.tau1
    q2 = k * math.sqrt(2.0)
    P0_top = p0_factor(k, Lam2, cfg)
    core = P0_top * k / ((Lam2 - Lam1) * q2)
    D = core * math.exp(-a * k)
    P0_tau1 = p0_factor(tau1, Lam2, cfg)
    D1 = -P0_tau1 * tau1 / ((tau1 - k) * ctx.dlam1_tau1 * ctx.p1_zero)
    if not (D > 0.0 and D1 > 0.0):
        raise ConsistencyError(
            f"resonance constants must be positive: D={D} (P0(k,Lambda2)={P0_top}), "
            f"D1={D1} (P0(tau1,Lambda2)={P0_tau1})"
        )
    S, mu, nu = setup.dip.S, setup.dip.mu, setup.dip.nu
    re_sigma = 0.5 * setup.epsilon**2 * core * math.exp(-2.0 * a * k) * k * (
        S + 2.0 * math.pi * mu
    )
    bracket = (k * S + 2.0 * math.pi * tau1 * mu) ** 2 + (
        2.0 * math.pi * nu
    ) ** 2 * (tau1 * tau1 - k * k)
    im_sigma = (
        0.25
        * setup.epsilon**4
        * (k / tau1)
        * core
        * D1
        * math.exp(-2.0 * a * tau1 - 2.0 * a * k)
        * bracket
    )
    # bracket >= (kS + 2 pi tau1 mu)^2 > 0, so im_sigma vanishes only when
    # the exponential underflows (deeply submerged or alpha -> 0, tau1 huge)
    exponent = -2.0 * a * tau1 - 2.0 * a * k
    if not (re_sigma > 0.0) or im_sigma < 0.0 or (
        im_sigma == 0.0 and exponent > -700.0
    ):
        raise ConsistencyError(
            f"problem-L resonance must have re, im > 0; got re={re_sigma}, im={im_sigma}"
        )
    decay = math.sqrt(k * g_grav) * re_sigma * im_sigma if g_grav is not None else None
    coeffs = Coefficients(
        D=D, D1=D1, P0_at={(k, Lam2): P0_top, (tau1, Lam2): P0_tau1}
    )
    return ResonanceResult(re_sigma=re_sigma, im_sigma=im_sigma,
                           rcal=math.nan, jcal=math.nan,
                           decay_rate=decay, coefficients=coeffs)


def lambda_omega(sigma: float, threshold: float, g_grav: float):
    """Convert sigma at a given cut-off to (lam, omega): lam = threshold (1 - sigma^2),
    omega = sqrt(g_grav lam)."""
    if not (abs(sigma) < 1.0):
        raise ValidationError(f"|sigma| must be < 1, got {sigma}")
    if not (threshold > 0.0):
        raise ValidationError(f"threshold must be positive, got {threshold}")
    if not (g_grav > 0.0):
        raise ValidationError(f"g_grav must be positive, got {g_grav}")
    lam = threshold * (1.0 - sigma * sigma)
    return lam, math.sqrt(g_grav * lam)


def at_submergence(setup: ProblemSetup, a: float) -> ProblemSetup:
    """Copy of setup with a different submergence (sweep helper)."""
    return replace(setup, a=a)
