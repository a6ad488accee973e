"""Frozen reference values for the test suite.

Generated by scripts/generate_goldens.py, which evaluates every formula
independently of the package (own root bracketing via bisection, complex-step
differentiation for lambda1', raw profile evaluation). Regenerate with

    python3 scripts/generate_goldens.py

and paste the printed dict here if the script changes. Unless noted, values
use the reference configuration beta = 0.5, b = 1, k = 1 with the unit
circle (S = pi, mu = 1, nu = 0), submergence a = 0.5, epsilon = 0.01.
"""

GOLD = {
    "lambda1_tau1_halfhalf": 0.2757806226933383,   # lambda1(1.0)
    "dlambda1_tau1_halfhalf": 0.38591757222031187,  # lambda1'(1.0)
    "Lambda1": 0.2757806226933383,
    "tau1": 3.0097472863649566,
    "q1": 1.1955000393816302,
    "p1_zero": 2.838763591386437,
    "tau1_alpha091": 1.3545961083231668,
    "tau1_alpha097": 1.2473187191805777,
    "Q_half_1": 3.1353352832366124,                 # Q(1.0)
    "Q_at_k": 3.1353352832366124,
    "Q_at_tau1": 0.3314461338972202,
    "P0_k_Lam1": -0.19405886766818442,
    "P0_k_Lam2": 0.34531626383997016,
    "P0_tau1_Lam2": -2.6645076179852687,
    "D_trapped_upper": 0.3511617776659891,
    "sigma_trapped_upper": 8.574689691603594e-05,
    "D_resonance_upper": 0.7555159234683471,
    "D1_resonance_upper": 4.698630286781669,
    "Rcal_std": -61.54694736111285,
    "re_sigma_resonance_upper": 0.00021594219565964167,
    "im_sigma_resonance_upper": 7.272057736320055e-09,
    "D_trapped_lower": 0.3522670013838832,
    "sigma_trapped_lower": 0.00010068525013749861,
    "D_resonance_lower": 0.20449592298471952,
    "D1_resonance_lower": 4.149551869431101,
    "re_sigma_resonance_lower": 5.84491964246673e-05,
    "im_sigma_resonance_lower": 1.0250460582446508e-08,
    "delta_circle": 0.5,
    "a_star_alpha05": 0.1704596941547139,
    "a_star_alpha091": 0.9847726208870158,
    "a_star_alpha097_candidate": 1.2250923373170701,  # exceeds b: no mode
    "a_star_alpha05_via_f": 0.1704596941547139,
    "w_d05_t301": 0.5129949017907878,               # solve_w(0.5, 3.01)
    "w_d05_t12": 1.642599233899636,                 # solve_w(0.5, 1.2)
    "tau0_alpha005": 39.0,                          # tanh saturates: (1+beta)/alpha
    "a_star_alpha005": 0.0009863554487293355,
    "a_star_alpha005_pred": 0.0009375000000000002,  # alpha^2 (1+delta) / (4k)
    "a_star_alpha005_ratio": 1.0521124786446243,
    "alpha_c": 0.9142316370457411,                  # bisection to 1e-8
    "p02_sigma01": 0.14106735979665885,             # surface branch, sigma = 0.1
    "p01_sigma01": 0.11934706413291121,             # interfacial branch, sigma = 0.1
    "p01_over_q1sigma": 0.9983024692717135,
    "p01_over_q1sigma_small": 0.9999998301406132,   # sigma = 1e-3
    "omega_g981_lam1": 3.132091952673165,           # sqrt(9.81 * 1.0)
    "area_egg": 4.209734155810335,                  # Fourier test contour below
}

# the "egg": an asymmetric smooth Fourier contour used across the tests
EGG = {
    "cos_x": [1.0, 0.2],
    "sin_x": [0.0, 0.0],
    "cos_y": [0.0, 0.0],
    "sin_y": [1.3, 0.1],
}
