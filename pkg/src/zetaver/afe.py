"""Approximate functional equations and the kernel-projection machinery:
AFE residuals for zeta and zeta1, the B_N projection identities, the weak
integral form of the functional equation, the explicit kernel-sum integral,
power means I_k / J_k, the dominant exponential sum S_1, and the power-mean
bound harness of the k-th moment inequality.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError
from .quadrature import QuadResult, integrate_finite
from .special import (
    _csum,
    chi,
    dirichlet_kernel,
    hurwitz_zeta1,
    kernel_index,
    riemann_zeta,
    riemann_zeta_many,
)

_2PI = 2.0 * math.pi

__all__ = [
    "AfeResidual",
    "PowerMean",
    "afe_zeta_residual",
    "afe_hurwitz_residual",
    "projection_identity_check",
    "weak_afe_residual",
    "weak_afe_forms_check",
    "lemma3_integral",
    "power_mean_Ik",
    "power_mean_Jk",
    "s1_sum",
    "theorem1_check",
    "kernel_norm_power",
    "loglog_slope",
]


@dataclasses.dataclass
class AfeResidual:
    """Residual of one approximate-functional-equation evaluation."""

    s: complex
    residual: float
    scaled: float

    def __post_init__(self) -> None:
        if self.residual < 0:
            raise ValueError("residual must be >= 0")


@dataclasses.dataclass
class PowerMean:
    k: int
    t_or_T: float
    value: float

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("power mean must be >= 0")


def _power_sum(N: int, z: complex) -> complex:
    n = np.arange(1, N + 1, dtype=float)
    return _csum(np.exp(z * np.log(n)))


def _twisted_power_sum(N: int, z: complex, alpha: float, sign: int) -> complex:
    n = np.arange(1, N + 1, dtype=float)
    return _csum(np.exp(z * np.log(n) + sign * 2j * math.pi * n * alpha))


def afe_zeta_residual(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> AfeResidual:
    """Residual of zeta(s) = sum_{n<=N} n^-s + chi(s) sum_{n<=N} n^{s-1},
    N = floor(sqrt(t/2pi)); scaled by t^{sigma/2}."""
    s = complex(s)
    sigma, t = s.real, s.imag
    if not (0.0 < sigma < 1.0 and t >= 10.0):
        raise DomainError("requires 0 < sigma < 1 and t >= 10")
    N = kernel_index(t)
    main = _power_sum(N, -s) + chi(s) * _power_sum(N, s - 1.0)
    resid = abs(riemann_zeta(s, cfg) - main)
    return AfeResidual(s, resid, resid * t ** (sigma / 2.0))


def afe_hurwitz_residual(s: complex, alpha: float, cfg: EvalConfig = DEFAULT_CONFIG) -> AfeResidual:
    """Residual of the shifted-series AFE with the twisted second sum,
    uniformly probed over 0 < alpha < 1."""
    s = complex(s)
    sigma, t = s.real, s.imag
    if not (0.0 < sigma < 1.0 and t >= 10.0):
        raise DomainError("requires 0 < sigma < 1 and t >= 10")
    if not 0.0 < alpha < 1.0:
        raise DomainError("requires 0 < alpha < 1")
    N = kernel_index(t)
    n = np.arange(1, N + 1, dtype=float)
    s1 = _csum(np.power(n + alpha, -s))
    s2 = _twisted_power_sum(N, s - 1.0, alpha, -1)
    resid = abs(hurwitz_zeta1(s, alpha, cfg) - s1 - chi(s) * s2)
    return AfeResidual(s, resid, resid * t ** (sigma / 2.0))


def projection_identity_check(
    z: complex,
    N: int,
    cfg: EvalConfig = DEFAULT_CONFIG,
    mirrored: bool = False,
):
    """Exact projection: sum_{n<=N} n^z recovered by integrating the kernel
    against the twisted sum.  mirrored=True uses B_N(-alpha) with e^{+2pi i m a}.

    Returns (lhs, rhs, quad_result).
    """
    if N < 1 or N > 1000:
        raise DomainError("N must be in [1, 1000] for the exact-mode check")
    z = complex(z)
    lhs = _power_sum(N, z)
    m = np.arange(1, N + 1, dtype=float)
    mz = np.exp(z * np.log(m))
    sign = 1 if mirrored else -1

    def integrand(a: np.ndarray) -> np.ndarray:
        kern = dirichlet_kernel(N, -a) if mirrored else dirichlet_kernel(N, a)
        phases = np.exp(sign * 2j * math.pi * np.outer(a, m))
        return kern * (phases @ mz)

    pts = list(np.linspace(0.0, 1.0, 3 * N + 9))
    res = integrate_finite(integrand, 0.0, 1.0, cfg, initial_points=pts,
                           abs_tol=max(cfg.abs_tol, 1e-13 * max(abs(lhs), 1.0)),
                           rel_tol=1e-12)
    return lhs, res.value, res


def _weak_afe_integrals(s: complex, cfg: EvalConfig):
    sigma, t = s.real, s.imag
    N = kernel_index(t)
    freq = t / _2PI + N + 2.0
    pts = list(np.linspace(0.0, 1.0, int(2.5 * freq) + 9))

    def f1(a: np.ndarray) -> np.ndarray:
        return dirichlet_kernel(N, a) * hurwitz_zeta1(s, a, cfg)

    def f2(a: np.ndarray) -> np.ndarray:
        return dirichlet_kernel(N, -a) * hurwitz_zeta1(1.0 - s, a, cfg)

    i1 = integrate_finite(f1, 0.0, 1.0, cfg, initial_points=pts, abs_tol=1e-11, rel_tol=1e-9)
    i2 = integrate_finite(f2, 0.0, 1.0, cfg, initial_points=pts, abs_tol=1e-11, rel_tol=1e-9)
    return i1, i2, N


def weak_afe_residual(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> AfeResidual:
    """Residual of the two-integral kernel form of the functional equation,
    scaled by t^{sigma/2} / log t."""
    s = complex(s)
    sigma, t = s.real, s.imag
    if not (0.0 < sigma < 1.0 and t >= 20.0):
        raise DomainError("requires 0 < sigma < 1 and t >= 20")
    i1, i2, _ = _weak_afe_integrals(s, cfg)
    resid = abs(riemann_zeta(s, cfg) - i1.value - chi(s) * i2.value)
    return AfeResidual(s, resid, resid * t ** (sigma / 2.0) / math.log(t))


def weak_afe_forms_check(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> dict:
    """Two-integral versus four-integral form: the two differ exactly by the
    kernel-projected partial sums, each of which is itself O(t^{-sigma/2} log t)."""
    s = complex(s)
    sigma, t = s.real, s.imag
    if not (0.0 < sigma < 1.0 and t >= 20.0):
        raise DomainError("requires 0 < sigma < 1 and t >= 20")
    i1, i2, N = _weak_afe_integrals(s, cfg)
    freq = t / _2PI + N + 2.0
    pts = list(np.linspace(0.0, 1.0, int(2.5 * freq) + 9))
    n = np.arange(1, N + 1, dtype=float)

    def c1(a: np.ndarray) -> np.ndarray:
        return dirichlet_kernel(N, a) * (np.power(a[:, None] + n[None, :], -s) @ np.ones(N))

    def c2(a: np.ndarray) -> np.ndarray:
        return dirichlet_kernel(N, -a) * (np.power(a[:, None] + n[None, :], s - 1.0) @ np.ones(N))

    q1 = integrate_finite(c1, 0.0, 1.0, cfg, initial_points=pts, abs_tol=1e-11, rel_tol=1e-9)
    q2 = integrate_finite(c2, 0.0, 1.0, cfg, initial_points=pts, abs_tol=1e-11, rel_tol=1e-9)
    zeta_val = riemann_zeta(s, cfg)
    chi_val = chi(s)
    two_form = abs(zeta_val - i1.value - chi_val * i2.value)
    corr = q1.value + chi_val * q2.value
    four_form = abs(zeta_val - i1.value - chi_val * i2.value + corr)
    env = t ** (-sigma / 2.0) * math.log(t)
    return {
        "s": s,
        "residual_two_form": two_form,
        "residual_four_form": four_form,
        "correction_1": abs(q1.value),
        "correction_2": abs(chi_val * q2.value),
        "corrections_over_envelope": (abs(q1.value) + abs(chi_val * q2.value)) / env,
    }


def lemma3_integral(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> dict:
    """Explicit evaluation of the kernel-weighted partial sum integral.

    The by-parts part int_1^N B_N(a) a^{-s} da is compared against the two
    explicit resolvent-type sums (residual scaled by t^{(1+sigma)/2}); the
    boundary strip [N, N+1] is measured against its own t^{-sigma/2} log t
    envelope, as is each leading sum.
    """
    s = complex(s)
    sigma, t = s.real, s.imag
    if not (0.0 < sigma < 1.0 and t >= 20.0):
        raise DomainError("requires 0 < sigma < 1 and t >= 20")
    N = kernel_index(t)

    def f(a: np.ndarray) -> np.ndarray:
        return dirichlet_kernel(N, a) * np.power(a, -s)

    def seg(lo: float, hi: float) -> QuadResult:
        freq = N + t / (_2PI * lo)
        pts = list(np.linspace(lo, hi, int(2.5 * freq * (hi - lo)) + 9))
        return integrate_finite(f, lo, hi, cfg, initial_points=pts, abs_tol=1e-11, rel_tol=1e-9)

    main = 0j
    evals = 0
    err = 0.0
    if N >= 2:
        for n0 in range(1, N):
            r = seg(float(n0), float(n0 + 1))
            main += r.value
            evals += r.evaluations
            err += r.err_estimate
    strip_res = seg(float(N), float(N + 1))
    evals += strip_res.evaluations

    n = np.arange(1, N + 1, dtype=float)
    sum1 = (1j / (_2PI * complex(np.exp(s * math.log(N))))) * _csum(1.0 / (t / (_2PI * N) - n))
    sum2 = (1.0 / (2j * math.pi)) * _csum(1.0 / (t / _2PI - n))
    resid = abs(main - sum1 - sum2)
    env = t ** (-sigma / 2.0) * math.log(t)
    return {
        "s": s,
        "value": main,
        "sums": sum1 + sum2,
        "residual": resid,
        "scaled_residual": resid * t ** ((1.0 + sigma) / 2.0),
        "strip": abs(strip_res.value),
        "strip_over_envelope": abs(strip_res.value) / env,
        "sums_over_envelope": (abs(sum1) + abs(sum2)) / env,
        "quad_error": err,
        "evaluations": evals,
    }


def power_mean_Ik(k: int, t: float, cfg: EvalConfig = DEFAULT_CONFIG) -> PowerMean:
    """I_k(t) = int_0^1 |zeta1(1/2 + it, alpha)|^{2k} d(alpha)."""
    if k not in (1, 2, 3):
        raise DomainError("k must be 1, 2 or 3")
    if not (_2PI <= t <= 3000.0):
        raise DomainError("t out of desk-scale range")
    s = 0.5 + 1j * t
    N = kernel_index(t)
    freq = 2.0 * k * (t / _2PI + N + 1.0)
    pts = list(np.linspace(0.0, 1.0, int(2.5 * freq) + 9))

    def f(a: np.ndarray) -> np.ndarray:
        return np.abs(hurwitz_zeta1(s, a, cfg)) ** (2 * k) + 0j

    res = integrate_finite(f, 0.0, 1.0, cfg, initial_points=pts, abs_tol=1e-10, rel_tol=1e-8)
    return PowerMean(k, t, float(res.value.real))


def power_mean_Jk(k: int, T: float, cfg: EvalConfig = DEFAULT_CONFIG) -> PowerMean:
    """J_k(T) = (1/T) int_0^T |zeta(1/2 + it)|^{2k} dt."""
    if k not in (1, 2):
        raise DomainError("k must be 1 or 2")
    if not (1.0 <= T <= 500.0):
        raise DomainError("T out of desk-scale range")

    def f(tv: np.ndarray) -> np.ndarray:
        return np.abs(riemann_zeta_many(0.5 + 1j * tv, cfg)) ** (2 * k) + 0j

    pts = list(np.linspace(0.0, T, int(2.0 * T) + 9))
    res = integrate_finite(f, 0.0, T, cfg, initial_points=pts, abs_tol=1e-9, rel_tol=1e-7)
    return PowerMean(k, T, float(res.value.real) / T)


def s1_sum(sigma: float, t: float, alpha: float) -> complex:
    """S_1(sigma, t, alpha) = sum_{1 <= n < t/2pi} e^{-2 pi i n alpha} n^{s-1}."""
    if not (0.0 < sigma < 1.0):
        raise DomainError("requires 0 < sigma < 1")
    if t <= _2PI:
        raise DomainError("requires t > 2 pi")
    x = t / _2PI
    n_max = int(math.floor(x))
    if float(n_max) == x:
        n_max -= 1
    s = complex(sigma, t)
    return _twisted_power_sum(n_max, s - 1.0, alpha, -1)


def theorem1_check(k: int, t_grid, cfg: EvalConfig = DEFAULT_CONFIG) -> list[dict]:
    """Ratios |zeta(1/2+it)| / (t^{1/4k} I_k(t)^{1/2k}) over a t grid."""
    if k not in (1, 2):
        raise DomainError("k must be 1 or 2")
    records = []
    for t in t_grid:
        t = float(t)
        zv = abs(riemann_zeta(0.5 + 1j * t, cfg))
        ik = power_mean_Ik(k, t, cfg).value
        ratio = zv / (t ** (1.0 / (4 * k)) * ik ** (1.0 / (2 * k)))
        records.append({"k": k, "t": t, "abs_zeta": zv, "Ik": ik, "ratio": ratio})
    return records


def kernel_norm_power(N: int, p: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """int_0^1 |B_N(alpha)|^p d(alpha)  (the p-th power of the L^p norm)."""
    if N < 1:
        raise DomainError("N must be >= 1")
    if p <= 0:
        raise DomainError("p must be positive")

    def f(a: np.ndarray) -> np.ndarray:
        return np.abs(dirichlet_kernel(N, a)) ** p + 0j

    pts = list(np.linspace(0.0, 1.0, int(2.5 * N) + 9))
    res = integrate_finite(f, 0.0, 1.0, cfg, initial_points=pts,
                           abs_tol=1e-9, rel_tol=1e-7, max_panels=120000)
    return float(res.value.real)


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log y against log x (boundedness probe)."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.maximum(np.asarray(ys, dtype=float), 1e-300))
    lx = lx - lx.mean()
    return float((lx @ (ly - ly.mean())) / (lx @ lx))
