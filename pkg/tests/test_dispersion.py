import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trapmodes import (
    ConsistencyError,
    FluidConfig,
    ValidationError,
    g_profile,
    g_profile_scaled,
    lambda1,
    lambda1_prime,
    lambda2,
    mode_profiles,
    near_threshold_wavenumbers,
    spectral_context,
)
from trapmodes.dispersion import solve_tau1

from goldens import GOLD

# moderate parameter boxes for the property tests; extreme corners (tanh
# saturation, alpha -> 0) get their own deterministic tests
betas = st.floats(0.05, 0.95)
depths = st.floats(0.2, 3.0)
waves = st.floats(0.2, 3.0)
taus = st.floats(0.05, 8.0)


def test_config_validation():
    with pytest.raises(ValidationError):
        FluidConfig(beta=1.0, b=1.0, k=1.0)
    with pytest.raises(ValidationError):
        FluidConfig(beta=0.0, b=1.0, k=1.0)
    with pytest.raises(ValidationError):
        FluidConfig(beta=0.5, b=-1.0, k=1.0)
    with pytest.raises(ValidationError):
        FluidConfig(beta=0.5, b=1.0, k=0.0)
    cfg = FluidConfig(beta=0.25, b=1.0, k=1.0)
    assert cfg.alpha == 0.75


def test_lambda1_golden(cfg_half):
    assert lambda1(1.0, cfg_half) == pytest.approx(GOLD["lambda1_tau1_halfhalf"], rel=1e-14)


def test_lambda1_prime_golden(cfg_half):
    assert lambda1_prime(1.0, cfg_half) == pytest.approx(
        GOLD["dlambda1_tau1_halfhalf"], rel=1e-13)


def test_lambda2_is_identity(cfg_half):
    for tau in (0.1, 1.0, 7.5):
        assert lambda2(tau, cfg_half) == tau


def test_branches_accept_arrays(cfg_half):
    tau = np.linspace(0.1, 4.0, 17)
    l1 = lambda1(tau, cfg_half)
    assert l1.shape == tau.shape
    assert np.allclose(l1, [lambda1(t, cfg_half) for t in tau], rtol=1e-15)


@given(tau=taus, beta=betas, b=depths)
@settings(max_examples=60, deadline=None)
def test_branch_ordering(tau, beta, b):
    cfg = FluidConfig(beta=beta, b=b, k=1.0)
    assert 0.0 < lambda1(tau, cfg) < lambda2(tau, cfg)


@given(tau=taus, beta=betas, b=depths)
@settings(max_examples=60, deadline=None)
def test_lambda1_prime_positive_and_matches_fd(tau, beta, b):
    cfg = FluidConfig(beta=beta, b=b, k=1.0)
    d = lambda1_prime(tau, cfg)
    assert d > 0.0
    h = 1e-6 * max(1.0, tau)
    fd = (lambda1(tau + h, cfg) - lambda1(tau - h, cfg)) / (2.0 * h)
    assert d == pytest.approx(fd, rel=1e-7, abs=1e-12)


def test_lambda1_no_overflow_at_large_argument(cfg_half):
    # tanh and sech saturate; naive cosh/sinh forms would overflow here
    val = lambda1(800.0, cfg_half)
    assert val == pytest.approx(0.5 * 800.0 / 1.5, rel=1e-12)
    assert lambda1_prime(800.0, cfg_half) == pytest.approx(0.5 / 1.5, rel=1e-12)


def test_tau1_golden(cfg_half):
    assert solve_tau1(cfg_half) == pytest.approx(GOLD["tau1"], rel=1e-13)


def test_tau1_other_alphas():
    for alpha, key in ((0.91, "tau1_alpha091"), (0.97, "tau1_alpha097")):
        cfg = FluidConfig(beta=1.0 - alpha, b=1.0, k=1.0)
        assert solve_tau1(cfg) == pytest.approx(GOLD[key], rel=1e-13)


@given(beta=betas, b=depths, k=waves)
@settings(max_examples=40, deadline=None)
def test_tau1_solves_crossing(beta, b, k):
    cfg = FluidConfig(beta=beta, b=b, k=k)
    t1 = solve_tau1(cfg)
    assert t1 > k
    assert lambda1(t1, cfg) == pytest.approx(k, rel=1e-11)


def test_spectral_context_golden(cfg_half, ctx_half):
    assert ctx_half.Lambda1 == pytest.approx(GOLD["Lambda1"], rel=1e-14)
    assert ctx_half.Lambda2 == cfg_half.k
    assert ctx_half.tau1 == pytest.approx(GOLD["tau1"], rel=1e-13)
    assert ctx_half.p1_zero == pytest.approx(GOLD["p1_zero"], rel=1e-13)
    assert ctx_half.Lambda1 < ctx_half.Lambda2 < ctx_half.tau1


def test_profile_derivative_consistency():
    # g' returned by g_profile matches d/dy of g
    tau, lam = 2.3, 0.8
    y = np.linspace(-1.0, 0.0, 9)
    g, gp = g_profile(y, tau, lam)
    h = 1e-6
    g_plus, _ = g_profile(y + h, tau, lam)
    g_minus, _ = g_profile(y - h, tau, lam)
    assert np.allclose(gp, (g_plus - g_minus) / (2 * h), rtol=1e-8, atol=1e-8)


@given(a=st.floats(0.01, 3.0), tau=st.floats(0.05, 20.0), lam=st.floats(0.01, 5.0))
@settings(max_examples=60, deadline=None)
def test_scaled_profile_matches_raw(a, tau, lam):
    g, gp = g_profile(-a, tau, lam)
    g_hat, gp_hat = g_profile_scaled(a, tau, lam)
    scale = math.exp(-a * tau)
    # absolute yardstick: the largest term of each expression (g itself can
    # pass through zero, where a relative comparison is meaningless)
    assert g_hat == pytest.approx(g * scale, rel=1e-12, abs=1e-13 * (tau + lam))
    assert gp_hat == pytest.approx(gp * scale, rel=1e-12,
                                   abs=1e-13 * tau * (tau + lam))


def test_scaled_profile_no_overflow():
    g_hat, gp_hat = g_profile_scaled(1.0, 2000.0, 1.0)
    assert math.isfinite(g_hat) and math.isfinite(gp_hat)
    # e^{-a tau} g -> (tau - lam)/2 for a tau >> 1
    assert g_hat == pytest.approx((2000.0 - 1.0) / 2.0, rel=1e-12)


def test_mode_profiles_interface_continuity(cfg_half, ctx_half):
    y = np.array([-cfg_half.b])
    phi1, phi2 = mode_profiles(ctx_half.p1_zero, "interfacial", cfg_half,
                               ctx_half.Lambda2, y)
    # phi2 is built to match phi1's derivative at the interface y = -b;
    # the profiles themselves must agree there up to the branch scaling
    g_b, gp_b = g_profile(-cfg_half.b, ctx_half.tau1, ctx_half.Lambda2)
    assert phi1[0] == pytest.approx(g_b, rel=1e-12)
    assert phi2[0] == pytest.approx(gp_b / ctx_half.tau1, rel=1e-12)


def test_mode_profiles_surface_branch(cfg_half):
    y = np.linspace(-2.0, 0.0, 5)
    phi1, phi2 = mode_profiles(0.5, "surface", cfg_half,
                               math.hypot(cfg_half.k, 0.5), y)
    tau = math.hypot(cfg_half.k, 0.5)
    assert np.allclose(phi1, np.exp(tau * y), rtol=1e-14)
    assert np.allclose(phi1, phi2, rtol=0, atol=0)


def test_mode_profiles_rejects_off_branch(cfg_half):
    with pytest.raises(ValidationError):
        mode_profiles(0.5, "interfacial", cfg_half, 5.0, np.array([0.0]))
    with pytest.raises(ValidationError):
        mode_profiles(0.5, "sideways", cfg_half, 1.0, np.array([0.0]))


def test_near_threshold_wavenumbers_goldens(cfg_half):
    assert near_threshold_wavenumbers(0.1, "second", cfg_half) == pytest.approx(
        GOLD["p02_sigma01"], rel=1e-14)
    assert near_threshold_wavenumbers(0.1, "first", cfg_half) == pytest.approx(
        GOLD["p01_sigma01"], rel=1e-12)
    assert near_threshold_wavenumbers(0.0, "first", cfg_half) == 0.0
    assert near_threshold_wavenumbers(0.0, "second", cfg_half) == 0.0


def test_near_threshold_asymptote(cfg_half, ctx_half):
    # p01 ~ q1 sigma as sigma -> 0
    q1 = math.sqrt(2.0 * cfg_half.k * ctx_half.Lambda1 / ctx_half.dlam1_k)
    p01 = near_threshold_wavenumbers(1e-3, "first", cfg_half)
    assert p01 / (q1 * 1e-3) == pytest.approx(GOLD["p01_over_q1sigma_small"], rel=1e-10)
    assert abs(p01 / (q1 * 1e-3) - 1.0) < 1e-5


def test_near_threshold_validation(cfg_half):
    with pytest.raises(ValidationError):
        near_threshold_wavenumbers(0.6, "first", cfg_half)
    with pytest.raises(ValidationError):
        near_threshold_wavenumbers(-0.1, "second", cfg_half)
    with pytest.raises(ValidationError):
        near_threshold_wavenumbers(0.1, "third", cfg_half)
