#!/usr/bin/env python3
"""One-off golden-value generator for the regression tests.

Evaluates every leading-order formula symbol by symbol with its own
hand-rolled bisection and finite differences, on purpose NOT importing
the package, so the frozen numbers in tests/ come from an independent
code path.  Run it and paste the printed dict into tests/goldens.py
whenever a golden has to change.
"""

import cmath
import math


def lam1(tau, alpha, b):
    beta = 1.0 - alpha
    T = math.tanh(b * tau)
    return alpha * tau * T / (1.0 + beta * T)


def lam1_prime_fd(tau, alpha, b, h=1e-6):
    return (lam1(tau + h, alpha, b) - lam1(tau - h, alpha, b)) / (2 * h)


def lam1_prime_cs(tau, alpha, b, h=1e-150):
    # complex-step derivative: machine accurate, no closed form needed
    beta = 1.0 - alpha
    z = tau + 1j * h
    T = cmath.tanh(b * z)
    return (alpha * z * T / (1.0 + beta * T)).imag / h


def bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def tau1_of(alpha, b, k):
    # positive root of lam1(tau) = k, above tau = k
    hi = k
    while lam1(hi, alpha, b) < k:
        hi *= 2.0
    return bisect(lambda t: lam1(t, alpha, b) - k, k, hi)


def q_factor(tau, alpha, b):
    beta = 1.0 - alpha
    return (2.0 / (beta * tau**2)) * math.exp(-b * tau) * (
        math.cosh(b * tau) + beta * math.sinh(b * tau))


def p0_factor(tau, lam, alpha, b):
    beta = 1.0 - alpha
    T = math.tanh(tau * b)
    return ((1.0 - beta * T) / (1.0 + beta * T)) * (lam + tau) * (
        lam - alpha * tau * T / (1.0 - beta * T))


def g_of(y, tau, lam):
    return tau * math.cosh(tau * y) + lam * math.sinh(tau * y)


def gp_of(y, tau, lam):
    return tau**2 * math.sinh(tau * y) + lam * tau * math.cosh(tau * y)


def main():
    out = {}

    # ---- dispersion basics at beta=0.5, b=1 -------------------------------
    alpha, b, k = 0.5, 1.0, 1.0
    beta = 1.0 - alpha
    out["lambda1_tau1_halfhalf"] = lam1(1.0, alpha, b)
    out["dlambda1_tau1_halfhalf"] = lam1_prime_cs(1.0, alpha, b)
    # the two independent derivative routes must agree to FD accuracy
    assert abs(lam1_prime_cs(1.0, alpha, b) - lam1_prime_fd(1.0, alpha, b)) < 1e-8

    Lam1 = lam1(k, alpha, b)
    Lam2 = k
    tau1 = tau1_of(alpha, b, k)
    dl_k = lam1_prime_cs(k, alpha, b)
    dl_t1 = lam1_prime_cs(tau1, alpha, b)
    q1 = math.sqrt(2.0 * k * Lam1 / dl_k)
    q2 = k * math.sqrt(2.0)
    p10 = math.sqrt(tau1**2 - k**2)
    out["Lambda1"] = Lam1
    out["tau1"] = tau1
    out["q1"] = q1
    out["p1_zero"] = p10

    # tau1 for the other two reference configurations
    out["tau1_alpha091"] = tau1_of(0.91, 1.0, 1.0)
    out["tau1_alpha097"] = tau1_of(0.97, 1.0, 1.0)

    # ---- Q and P0 ----------------------------------------------------------
    out["Q_half_1"] = q_factor(1.0, alpha, b)
    out["Q_at_k"] = q_factor(k, alpha, b)
    out["Q_at_tau1"] = q_factor(tau1, alpha, b)
    out["P0_k_Lam1"] = p0_factor(k, Lam1, alpha, b)
    out["P0_k_Lam2"] = p0_factor(k, Lam2, alpha, b)
    out["P0_tau1_Lam2"] = p0_factor(tau1, Lam2, alpha, b)

    # ---- standard configuration for the four main formulas ----------------
    # beta=0.5, b=1, k=1, a=0.5, unit circle, eps=0.01
    a = 0.5
    eps = 0.01
    S = math.pi
    mu = 1.0
    nu = 0.0

    # trapped mode, cylinder in the upper layer
    D_u = (alpha / beta) * math.exp(-b * k) / (
        q_factor(k, alpha, b) * dl_k * (Lam2 - Lam1) * q1)
    g1 = g_of(-a, k, Lam1)
    gp1 = gp_of(-a, k, Lam1)
    sig_tu = 2 * eps**2 * D_u * math.exp(-b * k) * (
        S * g1**2 + 2 * math.pi * mu * k**-2 * gp1**2)
    out["D_trapped_upper"] = D_u
    out["sigma_trapped_upper"] = sig_tu

    # resonance, upper layer
    D_ru = 4 * math.exp(-a * k) / (q_factor(k, alpha, b) * (Lam2 - Lam1) * q2)
    re_ru = 0.5 * eps**2 * D_ru * k**2 * math.exp(-a * k) * (S + 2 * math.pi * mu)
    D1_ru = Lam2 * tau1 / (q_factor(tau1, alpha, b) * dl_t1 * p10 * (tau1 - Lam2))
    g2 = g_of(-a, tau1, Lam2)
    gp2 = gp_of(-a, tau1, Lam2)
    Rcal = k * S * g2 + 2 * math.pi * mu * gp2
    Jcal = 2 * math.pi * nu * p10 * g2
    im_ru = eps**4 * (alpha * k / (beta * tau1**3)) * D_ru * D1_ru * math.exp(
        -a * k - 2 * b * tau1) * (Rcal**2 + Jcal**2)
    out["D_resonance_upper"] = D_ru
    out["D1_resonance_upper"] = D1_ru
    out["Rcal_std"] = Rcal
    out["re_sigma_resonance_upper"] = re_ru
    out["im_sigma_resonance_upper"] = im_ru

    # trapped mode, lower layer
    D_l = -math.exp(-k * a) * p0_factor(k, Lam1, alpha, b) * (
        1.0 / (Lam2 - Lam1)) * (k / (q1 * dl_k))
    sig_tl = 0.5 * eps**2 * D_l * math.exp(-a * k) * k * (S + 2 * math.pi * mu)
    out["D_trapped_lower"] = D_l
    out["sigma_trapped_lower"] = sig_tl

    # resonance, lower layer
    D_rl = math.exp(-a * k) * p0_factor(k, Lam2, alpha, b) * k / ((Lam2 - Lam1) * q2)
    re_rl = 0.5 * eps**2 * D_rl * math.exp(-a * k) * k * (S + 2 * math.pi * mu)
    D1_rl = -p0_factor(tau1, Lam2, alpha, b) * tau1 / ((tau1 - k) * dl_t1 * p10)
    im_rl = (eps**4 / 4) * (k / tau1) * D_rl * D1_rl * math.exp(
        -2 * a * tau1 - a * k) * ((k * S + 2 * math.pi * tau1 * mu)**2
                                  + (2 * math.pi * nu)**2 * (tau1**2 - k**2))
    out["D_resonance_lower"] = D_rl
    out["D1_resonance_lower"] = D1_rl
    out["re_sigma_resonance_lower"] = re_rl
    out["im_sigma_resonance_lower"] = im_rl

    # ---- embedded-mode chain (unit circle: delta = S/(2 pi mu) = 1/2) -----
    delta = S / (2 * math.pi * mu)
    out["delta_circle"] = delta

    def a_star_chain(alpha_):
        t0 = tau1_of(alpha_, 1.0, 1.0)  # b0 = kb = 1, tau0 = tau1/k
        rhs = t0 * (1 + delta) / (t0**2 + delta)
        w = math.atanh(rhs)
        return t0, w, w / t0

    t0_05, w_05, a0_05 = a_star_chain(0.5)
    out["a_star_alpha05"] = a0_05
    t0_91, w_91, a0_91 = a_star_chain(0.91)
    out["a_star_alpha091"] = a0_91
    t0_97, w_97, a0_97 = a_star_chain(0.97)
    out["a_star_alpha097_candidate"] = a0_97  # > 1, so no embedded mode

    # independent route: root of f(a) = 3 tau - (1+2 tau^2) tanh(a tau)
    def f_of(a_, tau_):
        return 3 * tau_ - (1 + 2 * tau_**2) * math.tanh(a_ * tau_)

    a_root = bisect(lambda x: f_of(x, t0_05), 1e-9, 1.0)
    out["a_star_alpha05_via_f"] = a_root

    # w arithmetic fixtures
    out["w_d05_t301"] = math.atanh(3.01 * 1.5 / (3.01**2 + 0.5))
    out["w_d05_t12"] = math.atanh(1.2 * 1.5 / (1.2**2 + 0.5))

    # small-alpha asymptote check at alpha = 0.05
    t0_s, w_s, a0_s = a_star_chain(0.05)
    pred = 0.05**2 * (1 + delta) / 4.0
    out["tau0_alpha005"] = t0_s
    out["a_star_alpha005"] = a0_s
    out["a_star_alpha005_pred"] = pred
    out["a_star_alpha005_ratio"] = a0_s / pred

    # existence threshold alpha_c for the unit circle at b=k=1:
    # bisection on the predicate a*(alpha) < b
    lo, hi = 0.5, 0.97
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        _, _, a0_m = a_star_chain(mid)
        if a0_m < 1.0:
            lo = mid
        else:
            hi = mid
    out["alpha_c"] = 0.5 * (lo + hi)

    # ---- near-threshold wavenumbers ----------------------------------------
    sig = 0.1
    out["p02_sigma01"] = k * sig * math.sqrt(2 - sig**2)
    # p01: root of lam1(sqrt(k^2-p^2)) = Lam1 (1 - sig^2) on (0, k)
    p01 = bisect(lambda p: lam1(math.sqrt(k**2 - p**2), alpha, b)
                 - Lam1 * (1 - sig**2), 1e-12, k - 1e-12)
    out["p01_sigma01"] = p01
    out["p01_over_q1sigma"] = p01 / (q1 * sig)
    sig2 = 1e-3
    p01b = bisect(lambda p: lam1(math.sqrt(k**2 - p**2), alpha, b)
                  - Lam1 * (1 - sig2**2), 1e-15, k - 1e-12)
    out["p01_over_q1sigma_small"] = p01b / (q1 * sig2)

    # ---- misc ---------------------------------------------------------------
    out["omega_g981_lam1"] = math.sqrt(9.81 * 1.0)

    # area of the Fourier test contour below via dense trapezoid oracle
    # X = cos t + 0.2 cos 2t, Y = 1.3 sin t + 0.1 sin 2t  (smooth egg shape)
    n = 1 << 16
    acc = 0.0
    for i in range(n):
        t = 2 * math.pi * i / n
        X = math.cos(t) + 0.2 * math.cos(2 * t)
        Y = 1.3 * math.sin(t) + 0.1 * math.sin(2 * t)
        Xd = -math.sin(t) - 0.4 * math.sin(2 * t)
        Yd = 1.3 * math.cos(t) + 0.2 * math.cos(2 * t)
        acc += (X * Yd - Y * Xd)
    out["area_egg"] = 0.5 * acc * (2 * math.pi / n)

    for key, val in out.items():
        print(f'    "{key}": {val!r},')


if __name__ == "__main__":
    main()
