"""Approximate functional equations, kernel projections, explicit kernel
integrals, power means, the dominant sum, and the power-mean bound chain."""

import math

import numpy as np
import pytest

from zetaver import afe
from zetaver.errors import DomainError

_2PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# classic AFE
# ---------------------------------------------------------------------------


def _calibration_max(sigma: float, ts) -> float:
    return max(afe.afe_zeta_residual(complex(sigma, t)).scaled for t in ts)


def test_afe_zeta_scaled_bounded_by_calibration():
    cal = _calibration_max(0.5, [10.0, 25.0, 50.0, 75.0, 100.0])
    r = afe.afe_zeta_residual(complex(0.5, 1000.0))
    assert r.scaled <= 1.05 * cal


def test_afe_zeta_residual_decays():
    r500 = afe.afe_zeta_residual(complex(0.7, 500.0))
    r50 = afe.afe_zeta_residual(complex(0.7, 50.0))
    assert r500.residual <= r50.residual


def test_afe_zeta_boundary_continuity():
    # t crossing 2 pi k^2 changes N by one; the residual stays on scale
    t_edge = _2PI * 9.0
    below = afe.afe_zeta_residual(complex(0.5, t_edge - 1e-6)).scaled
    above = afe.afe_zeta_residual(complex(0.5, t_edge + 1e-6)).scaled
    cal = _calibration_max(0.5, [25.0, 50.0, 100.0])
    assert abs(above - below) <= 2.0 * cal


def test_afe_zeta_domain():
    with pytest.raises(DomainError):
        afe.afe_zeta_residual(complex(1.5, 50.0))


# ---------------------------------------------------------------------------
# shifted-series AFE
# ---------------------------------------------------------------------------


def test_afe_hurwitz_scaled_bounded():
    cal = max(afe.afe_hurwitz_residual(complex(0.5, t), 0.5).scaled for t in [25.0, 50.0, 100.0])
    r = afe.afe_hurwitz_residual(complex(0.5, 500.0), 0.5)
    assert r.scaled <= 2.0 * cal


def test_afe_hurwitz_reduces_to_zeta_as_alpha_vanishes():
    s = complex(0.5, 200.0)
    rz = afe.afe_zeta_residual(s)
    rh = afe.afe_hurwitz_residual(s, 1e-7)
    assert abs(rh.residual - rz.residual) <= 1e-3


def test_afe_hurwitz_uniform_in_alpha():
    s = complex(0.5, 300.0)
    mid = afe.afe_hurwitz_residual(s, 0.5).scaled
    worst = max(afe.afe_hurwitz_residual(s, a).scaled for a in np.linspace(0.05, 0.95, 10))
    assert worst <= 3.0 * max(mid, 0.3)


# ---------------------------------------------------------------------------
# projection identities (exact)
# ---------------------------------------------------------------------------


def test_projection_orthogonality_simple():
    lhs, rhs, _ = afe.projection_identity_check(0.0, 7)
    assert abs(lhs - 7.0) < 1e-12
    assert abs(rhs - 7.0) < 1e-10


def test_projection_complex_exponent():
    lhs, rhs, _ = afe.projection_identity_check(-0.5 + 3j, 50)
    assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), 1.0)


def test_projection_mirrored_matches():
    z = 0.3 - 2j
    l1, r1, _ = afe.projection_identity_check(z, 40)
    l2, r2, _ = afe.projection_identity_check(z, 40, mirrored=True)
    assert abs(l1 - l2) == 0.0
    assert abs(r1 - r2) <= 1e-10 * max(abs(r1), 1.0)


def test_kernel_reconstruction_orthogonality():
    # int_0^1 B_N(a) e^{-2 pi i m a} da = 1 for 1 <= m <= N else 0
    from zetaver.quadrature import integrate_finite
    from zetaver.special import dirichlet_kernel

    n = 12
    for m in (1, 7, 12, 13, 20, 0, -3):
        def f(a, m=m):
            return dirichlet_kernel(n, a) * np.exp(-2j * math.pi * m * a)

        val = integrate_finite(f, 0.0, 1.0, initial_points=list(np.linspace(0, 1, 4 * n + 9))).value
        want = 1.0 if 1 <= m <= n else 0.0
        assert abs(val - want) < 1e-11


# ---------------------------------------------------------------------------
# weak integral form of the functional equation
# ---------------------------------------------------------------------------


def test_weak_afe_scaled_bounded_by_calibration():
    cal = max(afe.weak_afe_residual(complex(0.5, t)).scaled for t in [20.0, 50.0, 100.0])
    r = afe.weak_afe_residual(complex(0.5, 200.0))
    assert r.scaled <= 1.2 * cal


def test_weak_afe_slope_not_exploding():
    ts = [50.0, 100.0, 200.0, 400.0]
    vals = [afe.weak_afe_residual(complex(0.6, t)).scaled for t in ts]
    assert afe.loglog_slope(ts, vals) <= 0.1


def test_weak_afe_four_form_vs_two_form():
    d = afe.weak_afe_forms_check(complex(0.5, 100.0))
    # the two forms differ by exactly the explicit correction terms
    assert abs(d["residual_two_form"] - d["residual_four_form"]) <= (
        d["correction_1"] + d["correction_2"] + 1e-12
    )
    # and those corrections sit inside their envelope
    assert d["corrections_over_envelope"] <= 2.0


# ---------------------------------------------------------------------------
# explicit kernel-sum integral
# ---------------------------------------------------------------------------


def test_lemma3_scaled_residual_bounded():
    base = afe.lemma3_integral(complex(0.5, 50.0))
    for t in (100.0, 200.0):
        d = afe.lemma3_integral(complex(0.5, t))
        assert d["scaled_residual"] <= 10.0 * max(base["scaled_residual"], 0.05)


def test_lemma3_leading_sums_and_strip_envelopes():
    for t in (50.0, 100.0, 200.0):
        d = afe.lemma3_integral(complex(0.5, t))
        assert d["sums_over_envelope"] <= 3.0
        assert d["strip_over_envelope"] <= 1.0


# ---------------------------------------------------------------------------
# power means
# ---------------------------------------------------------------------------


def test_I1_matches_asymptotic_loosely():
    val = afe.power_mean_Ik(1, 100.0).value
    assert abs(val - (math.log(100.0 / _2PI) + float(np.euler_gamma))) < 0.05


def test_I1_parseval_route():
    from zetaver.fourier import parseval_second_moment

    rep = parseval_second_moment(complex(0.5, 50.0))
    assert rep.rel_residual <= 1e-5


def test_Ik_power_mean_inequality():
    for t in (50.0, 100.0):
        i1 = afe.power_mean_Ik(1, t).value
        i2 = afe.power_mean_Ik(2, t).value
        assert i2 >= i1**2 - 1e-9


def test_Ik_real_nonnegative_conjugation_symmetric():
    from zetaver.special import hurwitz_zeta1

    pm = afe.power_mean_Ik(1, 50.0)
    assert pm.value >= 0.0
    # the integrand is conjugation-symmetric in t, so I_k(-t) = I_k(t)
    for a in (0.2, 0.5, 0.9):
        up = abs(complex(hurwitz_zeta1(complex(0.5, 50.0), a)))
        dn = abs(complex(hurwitz_zeta1(complex(0.5, -50.0), a)))
        assert up == pytest.approx(dn, rel=1e-13)


def test_Jk_against_classical_envelope():
    j1 = afe.power_mean_Jk(1, 100.0).value
    envelope = math.log(100.0 / _2PI) + 2.0 * float(np.euler_gamma) - 1.0
    assert abs(j1 - envelope) <= 0.15 * math.log(100.0)


def test_Jk_inequality_and_growth():
    j1_100 = afe.power_mean_Jk(1, 100.0).value
    j2_100 = afe.power_mean_Jk(2, 100.0).value
    assert j2_100 >= j1_100**2 - 1e-9
    j1_200 = afe.power_mean_Jk(1, 200.0).value
    assert j1_200 - j1_100 <= 1.0  # sublinear growth in T


# ---------------------------------------------------------------------------
# dominant exponential sum
# ---------------------------------------------------------------------------


def test_s1_definition_alpha_zero():
    t = _2PI * 10.5
    val = afe.s1_sum(0.5, t, 0.0)
    n = np.arange(1, 11, dtype=float)
    ref = complex(np.sum(np.power(n, complex(0.5, t) - 1.0)))
    assert abs(val - ref) < 1e-12


def test_s1_conjugation_term_structure():
    sigma, t, alpha = 0.5, 70.0, 0.3
    val = afe.s1_sum(sigma, t, -alpha)
    n = np.arange(1, int(t / _2PI) + 1, dtype=float)
    ref = np.conj(np.sum(np.exp(-2j * math.pi * n * alpha) * np.power(n, complex(sigma, -t) - 1.0)))
    assert abs(val - ref) < 1e-12


def test_s1_triangle_bound():
    sigma, t = 0.3, 100.0
    val = afe.s1_sum(sigma, t, 0.37)
    n = np.arange(1, int(t / _2PI) + 1, dtype=float)
    assert abs(val) <= np.sum(n ** (sigma - 1.0)) + 1e-12


def test_s1_domain():
    with pytest.raises(DomainError):
        afe.s1_sum(0.5, 5.0, 0.1)


# ---------------------------------------------------------------------------
# power-mean bound chain
# ---------------------------------------------------------------------------


def test_theorem1_ratios_bounded():
    recs = afe.theorem1_check(1, [50.0, 100.0, 200.0, 400.0])
    ratios = [r["ratio"] for r in recs]
    assert max(ratios) < 2.0  # comfortably bounded at desk scale
    r2 = afe.theorem1_check(2, [100.0])[0]
    assert r2["ratio"] <= 2.0 * max(ratios)


def test_theorem1_ratio_stable_under_precision():
    from zetaver.config import EvalConfig

    t = 100.0
    a = afe.theorem1_check(1, [t])[0]["ratio"]
    cfg = EvalConfig(rel_tol=1e-12, em_terms=20)
    b = afe.theorem1_check(1, [t], cfg)[0]["ratio"]
    assert abs(a - b) <= 1e-6 * abs(a)


def test_kernel_norm_parseval():
    for n in (10, 100, 1000):
        assert abs(afe.kernel_norm_power(n, 2.0) - n) <= 1e-12 * n


def test_kernel_norm_l1_slowly_varying():
    vals = [afe.kernel_norm_power(n, 1.0) / math.log(n) for n in (10, 100, 1000, 10000)]
    for a, b in zip(vals, vals[1:]):
        assert b <= 1.6 * a and b >= a / 1.6


def test_kernel_norm_hoelder_chain():
    # ||B_N||_q^q = O(N^{q-1}) for q = 2k/(2k-1), constants bounded in N
    for k in (1, 2):
        q = 2.0 * k / (2.0 * k - 1.0)
        consts = [afe.kernel_norm_power(n, q) / n ** (q - 1.0) for n in (10, 100, 1000, 10000)]
        assert max(consts) <= 4.0 * min(consts)
        assert max(consts) < 10.0
