"""Verifiers for the contour identity of the squared modified Hurwitz zeta
and the product-moment identities: quadratic, triple and quadruple unit
moments, the Mellin closed form of the weighted tail integral, the
unit-interval recursion, the explicit quadratic-moment (Katsurada-type)
identity, the second-moment asymptotic harness, and the large-t behaviour
of the weighted unit integrals.

Every verifier computes the two sides by independent routes and reports the
residuals in an IdentityReport.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from . import afe
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DivergenceError, DomainError, PoleError
from .quadrature import (
    ContourSpec,
    integrate_finite,
    integrate_oscillatory,
    integrate_semi_infinite,
    integrate_unit_power_singular,
    integrate_vertical_line,
    stirling_truncation_height,
    OscSpec,
)
from .special import (
    hurwitz_zeta1,
    lgamma,
    riemann_zeta,
    riemann_zeta_many,
    hurwitz_zeta1_many_s,
)

_2PI = 2.0 * math.pi
_TINY = 1e-300

__all__ = [
    "IdentityReport",
    "MomentParams",
    "f_series",
    "f_contour",
    "contour_interval",
    "default_abscissa",
    "verify_square_identity",
    "verify_quadratic_moment",
    "verify_triple_moment",
    "verify_quadruple_moment",
    "mellin_tail_closed_form",
    "mellin_tail_check",
    "unit_interval_recursion",
    "verify_katsurada",
    "katsurada_split_check",
    "i1_asymptotic_check",
    "remark_219_check",
    "sum_recip_m_mp1u",
]


@dataclasses.dataclass
class IdentityReport:
    """One verification record: both sides of an identity plus residuals."""

    identity_id: str
    params: dict
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    evaluations: int = 0

    @classmethod
    def build(cls, identity_id: str, params: dict, lhs: complex, rhs: complex, evaluations: int = 0):
        lhs = complex(lhs)
        rhs = complex(rhs)
        absres = abs(lhs - rhs)
        return cls(identity_id, params, lhs, rhs, absres,
                   absres / max(abs(lhs), _TINY), evaluations)


@dataclasses.dataclass(frozen=True)
class MomentParams:
    """Exponent list (2 to 4 entries) for the product-moment identities."""

    us: tuple

    def __post_init__(self) -> None:
        if not 2 <= len(self.us) <= 4:
            raise DomainError("need 2 to 4 exponents")
        object.__setattr__(self, "us", tuple(complex(u) for u in self.us))

    def require_direct_mode(self) -> None:
        if any(u.real <= 1.0 for u in self.us):
            raise DomainError("direct verification needs Re u > 1 for every exponent")


# ---------------------------------------------------------------------------
# f(u, v, alpha): the off-diagonal double sum and its contour route.
# ---------------------------------------------------------------------------


def f_series(u: complex, v: complex, alpha: float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """f(u,v,alpha) = sum_{n,m >= 1} (n+alpha)^{-v} (n+m+alpha)^{-u}.

    The inner sum is zeta1(u, n+alpha) exactly; the outer sum is truncated
    at M with an Euler-Maclaurin tail (integral plus half-term plus first
    derivative correction), so slowly converging exponent combinations stay
    certified.
    """
    u = complex(u)
    v = complex(v)
    if not (u.real > 1.0 and v.real > 1.0):
        raise DivergenceError("f(u,v,alpha) requires Re u > 1 and Re v > 1")
    if alpha < 0.0:
        raise DomainError("alpha must be >= 0")
    p = (u + v).real
    M = max(48, int(math.ceil(2.0 * (abs(u) + abs(v)))))
    n = np.arange(1, M + 1, dtype=float)
    x = n + alpha
    head = complex(np.sum(np.power(x, -v) * hurwitz_zeta1(u, x, cfg)))

    def h(xx):
        xa = np.asarray(xx, dtype=float) + alpha
        return np.power(xa, -v) * hurwitz_zeta1(u, xa, cfg)

    def h_prime(xx: float) -> complex:
        xa = xx + alpha
        z1 = complex(hurwitz_zeta1(u, xa, cfg))
        z2 = complex(hurwitz_zeta1(u + 1.0, xa, cfg))
        return -v * xa ** -(v + 1.0) * z1 - u * xa**-v * z2

    a0 = float(M + 1)
    tail_int = integrate_semi_infinite(h, a0, p - 1.0, cfg,
                                       abs_tol=cfg.abs_tol, rel_tol=cfg.rel_tol / 4.0)
    tail = tail_int.value + complex(h(np.array([a0]))[0]) / 2.0 - h_prime(a0) / 12.0
    return head + tail


def contour_interval(u: complex, v: complex) -> tuple[float, float]:
    """Admissible abscissas for the contour route: both zeta factors must
    stay in their series half-planes, giving max(-Re u, 1-Re(u+v)) < c < -1."""
    lo = max(-u.real, 1.0 - (u + v).real)
    return lo, -1.0


def default_abscissa(u: complex, v: complex) -> float:
    """Midpoint of the admissible interval, nudged off integers."""
    lo, hi = contour_interval(u, v)
    if not lo < hi:
        raise DomainError("empty admissible abscissa interval")
    c = 0.5 * (lo + hi)
    if abs(c - round(c)) < 1e-3:
        shift = 0.05 if c + 0.05 < hi else -0.05
        c += shift
    return c


def _contour_quadrature(g, c: float, poles: list[float], poly_degree: float,
                        cfg: EvalConfig, abs_tol: float, rel_tol: float):
    clearance = min(abs(c - p) for p in poles)
    t_max = stirling_truncation_height(abs_tol / 10.0, poly_degree=poly_degree)
    for _ in range(3):
        edge = max(abs(complex(g(np.array([c + 1j * t_max], dtype=complex))[0])),
                   abs(complex(g(np.array([c - 1j * t_max], dtype=complex))[0])))
        if edge < abs_tol / 10.0:
            break
        t_max *= 1.5
    spec = ContourSpec(c=c, t_max=t_max, pole_clearance=clearance)
    return integrate_vertical_line(g, spec, cfg, abs_tol=abs_tol, rel_tol=rel_tol)


def f_contour(
    u: complex,
    v: complex,
    alpha: float,
    c: float | None = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    abs_tol: float | None = None,
    rel_tol: float | None = None,
) -> complex:
    """Contour route for f(u,v,alpha): a vertical-line integral of
    Gamma(u+z)Gamma(-z)/Gamma(u) zeta(-z) zeta1(u+v+z, alpha)."""
    u = complex(u)
    v = complex(v)
    if not (u.real > 1.0 and v.real > 1.0):
        raise DomainError("contour route verified for Re u > 1, Re v > 1")
    if c is None:
        c = default_abscissa(u, v)
    lo, hi = contour_interval(u, v)
    if not lo < c < hi:
        raise DomainError(f"abscissa {c} outside admissible interval ({lo}, {hi})")
    lg_u = complex(lgamma(u))

    def g(z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        br = np.exp(lgamma(u + z) + lgamma(-z) - lg_u)
        return br * riemann_zeta_many(-z, cfg) * hurwitz_zeta1_many_s(u + v + z, alpha, cfg)

    atol = cfg.abs_tol if abs_tol is None else abs_tol
    rtol = cfg.rel_tol if rel_tol is None else rel_tol
    poles = [0.0, -1.0, 1.0 - (u + v).real, -u.real]
    res = _contour_quadrature(g, c, poles, poly_degree=u.real + abs(c) + 1.0,
                              cfg=cfg, abs_tol=atol, rel_tol=rtol)
    return complex(res.value)


def verify_square_identity(
    s: complex,
    alpha: float,
    c: float | None = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> IdentityReport:
    """|zeta1(s,alpha)|^2 against zeta1(2 sigma, alpha) plus the two-Gamma
    contour integral, for sigma > 1 and t >= 0."""
    s = complex(s)
    sigma, t = s.real, s.imag
    if sigma <= 1.0:
        raise DomainError("requires sigma > 1")
    if t < 0.0:
        raise DomainError("requires t >= 0 (conjugation covers t < 0)")
    if alpha < 0.0:
        raise DomainError("alpha must be >= 0")
    sb = s.conjugate()
    if c is None:
        c = default_abscissa(s, sb)
    lo, hi = contour_interval(s, sb)
    if not lo < c < hi:
        raise DomainError(f"abscissa {c} outside admissible interval ({lo}, {hi})")
    z1 = complex(hurwitz_zeta1(s, alpha, cfg))
    lhs = abs(z1) ** 2
    lg_s = complex(lgamma(s))
    lg_sb = complex(lgamma(sb))

    def g(z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        lgz = lgamma(-z)
        br = np.exp(lgamma(s + z) - lg_s + lgz) + np.exp(lgamma(sb + z) - lg_sb + lgz)
        return br * riemann_zeta_many(-z, cfg) * hurwitz_zeta1_many_s(2.0 * sigma + z, alpha, cfg)

    atol = max(cfg.abs_tol, 1e-12 * max(lhs, 1.0))
    poles = [0.0, -1.0, 1.0 - 2.0 * sigma, -sigma]
    res = _contour_quadrature(g, c, poles, poly_degree=sigma + abs(c) + 1.0,
                              cfg=cfg, abs_tol=atol, rel_tol=1e-10)
    rhs = complex(hurwitz_zeta1(2.0 * sigma, alpha, cfg)) + res.value
    return IdentityReport.build(
        "square_identity",
        {"sigma": sigma, "t": t, "alpha": alpha, "c": c},
        lhs,
        rhs,
        res.evaluations,
    )


# ---------------------------------------------------------------------------
# Product-moment identities on the unit interval.
# ---------------------------------------------------------------------------


def _zeta1_product(us, cfg: EvalConfig):
    def f(a: np.ndarray) -> np.ndarray:
        acc = hurwitz_zeta1(us[0], a, cfg)
        for u in us[1:]:
            acc = acc * hurwitz_zeta1(u, a, cfg)
        return acc

    return f


def _unit_moment_lhs(us, cfg: EvalConfig):
    t_max = max(abs(u.imag) for u in us)
    pts = list(np.linspace(0.0, 1.0, int(4 * t_max) + 17))
    return integrate_finite(_zeta1_product(us, cfg), 0.0, 1.0, cfg,
                            initial_points=pts, abs_tol=1e-13, rel_tol=2e-11)


def _weighted_tail(weight: complex, us, cfg: EvalConfig):
    """int_1^inf alpha^{-weight} prod zeta1(u_i, alpha) d(alpha)."""
    prod = _zeta1_product(us, cfg)
    decay = weight.real + sum(u.real - 1.0 for u in us)

    def f(a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=float)
        return np.power(a, -weight) * prod(a)

    return integrate_semi_infinite(f, 1.0, decay, cfg, abs_tol=1e-13, rel_tol=2e-11)


def verify_quadratic_moment(p: MomentParams | tuple, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Unit moment of zeta1(u,.)zeta1(v,.) against the rational term plus
    the two weighted tail integrals."""
    mp_ = p if isinstance(p, MomentParams) else MomentParams(tuple(p))
    if len(mp_.us) != 2:
        raise DomainError("quadratic moment needs exactly two exponents")
    mp_.require_direct_mode()
    u, v = mp_.us
    lhs_res = _unit_moment_lhs(mp_.us, cfg)
    t1 = _weighted_tail(v, (u,), cfg)
    t2 = _weighted_tail(u, (v,), cfg)
    rhs = 1.0 / (u + v - 1.0) + t1.value + t2.value
    return IdentityReport.build(
        "quadratic_moment",
        {"u": u, "v": v},
        lhs_res.value,
        rhs,
        lhs_res.evaluations + t1.evaluations + t2.evaluations,
    )


def verify_triple_moment(p: MomentParams | tuple, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Triple unit moment: rational term, three pair-weighted single tails
    and three singly-weighted pair tails."""
    mp_ = p if isinstance(p, MomentParams) else MomentParams(tuple(p))
    if len(mp_.us) != 3:
        raise DomainError("triple moment needs exactly three exponents")
    mp_.require_direct_mode()
    u1, u2, u3 = mp_.us
    lhs_res = _unit_moment_lhs(mp_.us, cfg)
    evals = lhs_res.evaluations
    rhs = 1.0 / (u1 + u2 + u3 - 1.0)
    idx = (0, 1, 2)
    for i in idx:
        rest = [mp_.us[j] for j in idx if j != i]
        r = _weighted_tail(mp_.us[i], tuple(rest), cfg)  # alpha^{-u_i} * pair
        rhs += r.value
        evals += r.evaluations
        r = _weighted_tail(rest[0] + rest[1], (mp_.us[i],), cfg)  # alpha^{-(u_j+u_k)} * single
        rhs += r.value
        evals += r.evaluations
    return IdentityReport.build(
        "triple_moment",
        {"us": mp_.us},
        lhs_res.value,
        rhs,
        evals,
    )


def quadruple_rhs_terms(p: MomentParams, cfg: EvalConfig = DEFAULT_CONFIG) -> list[tuple[str, complex]]:
    """The 15 RHS summands of the quadruple identity (1 rational + 4 + 6 + 4)."""
    us = p.us
    if len(us) != 4:
        raise DomainError("quadruple moment needs exactly four exponents")
    p.require_direct_mode()
    terms: list[tuple[str, complex]] = [("rational", 1.0 / (sum(us) - 1.0))]
    idx = (0, 1, 2, 3)
    for i in idx:  # 4 terms: triple-sum weight, single factor
        weight = sum(us[j] for j in idx if j != i)
        terms.append((f"single_{i}", _weighted_tail(weight, (us[i],), cfg).value))
    for i in idx:  # 6 terms: pair weight, complementary pair product
        for j in idx:
            if j <= i:
                continue
            rest = tuple(us[k] for k in idx if k not in (i, j))
            terms.append((f"pair_{i}{j}", _weighted_tail(us[i] + us[j], rest, cfg).value))
    for i in idx:  # 4 terms: single weight, triple product
        rest = tuple(us[j] for j in idx if j != i)
        terms.append((f"triple_{i}", _weighted_tail(us[i], rest, cfg).value))
    return terms


def verify_quadruple_moment(p: MomentParams | tuple, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Quadruple unit moment, with the RHS assembled from exactly 15 terms."""
    mp_ = p if isinstance(p, MomentParams) else MomentParams(tuple(p))
    terms = quadruple_rhs_terms(mp_, cfg)
    assert len(terms) == 15, "quadruple RHS must carry 1+4+6+4 summands"
    lhs_res = _unit_moment_lhs(mp_.us, cfg)
    rhs = sum(val for _, val in terms)
    report = IdentityReport.build(
        "quadruple_moment",
        {"us": mp_.us, "rhs_terms": len(terms)},
        lhs_res.value,
        rhs,
        lhs_res.evaluations,
    )
    return report


# ---------------------------------------------------------------------------
# Closed form of the full-line weighted tail and the unit-interval recursion.
# ---------------------------------------------------------------------------


def mellin_tail_closed_form(u: complex, v: complex) -> complex:
    """int_0^inf alpha^{-v} zeta1(u,alpha) d(alpha)
    = Gamma(1-v) Gamma(u+v-1) zeta(u+v-1) / Gamma(u)."""
    u = complex(u)
    v = complex(v)
    if not (u.real > 1.0 and v.real < 1.0 and (u + v).real > 2.0):
        raise DomainError("requires Re u > 1, Re v < 1, Re(u+v) > 2")
    return complex(
        np.exp(lgamma(1.0 - v) + lgamma(u + v - 1.0) - lgamma(u))
        * riemann_zeta(u + v - 1.0)
    )


def _weighted_unit_integral(power: complex, u: complex, cfg: EvalConfig,
                            abs_tol: float = 1e-13, rel_tol: float = 2e-11):
    """int_0^1 alpha^{power} zeta1(u, alpha) d(alpha), -1 < Re power."""
    power = complex(power)

    def f(a: np.ndarray) -> np.ndarray:
        return hurwitz_zeta1(u, a, cfg)

    if power.real <= 0.0:
        def fp(a: np.ndarray) -> np.ndarray:
            return f(a)

        return integrate_unit_power_singular(fp, power, cfg, abs_tol=abs_tol, rel_tol=rel_tol)

    def g(a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=float)
        return np.power(a, power) * f(a)

    pts = [2.0**-k for k in range(1, 30)] + list(np.linspace(0.0, 1.0, int(4 * abs(u.imag) + 4 * abs(power.imag)) + 17))
    return integrate_finite(g, 0.0, 1.0, cfg, initial_points=pts, abs_tol=abs_tol, rel_tol=rel_tol)


def mellin_tail_check(u: complex, v: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Closed form against direct quadrature, split at alpha = 1 with the
    endpoint-singularity substitution on (0, 1)."""
    closed = mellin_tail_closed_form(u, v)
    unit = _weighted_unit_integral(-v, u, cfg)
    tail = _weighted_tail(v, (u,), cfg)
    return IdentityReport.build(
        "mellin_tail",
        {"u": u, "v": v},
        closed,
        unit.value + tail.value,
        unit.evaluations + tail.evaluations,
    )


def unit_interval_recursion(u: complex, v: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Integration-by-parts recursion for int_0^1 alpha^{-v} zeta1(u,alpha):
    equals (zeta(u)-1)/(1-v) + u/(1-v) int_0^1 alpha^{1-v} zeta1(u+1,alpha).

    Verified directly for Re v < 1; at v = 1 both sides are replaced by
    their finite limits; for 1 < Re v < 2 the left side is computed through
    the subtracted representation (zeta1 - zeta)."""
    u = complex(u)
    v = complex(v)
    if v.real >= 2.0:
        raise DomainError("requires Re v < 2")
    if u == 1.0 or u == 0.0:
        raise PoleError("u and u+1 must avoid the zeta pole")
    zu = complex(riemann_zeta(u, cfg))
    if v == 1.0:
        # limit mode: both sides finite
        def f_reg(a: np.ndarray) -> np.ndarray:
            a = np.asarray(a, dtype=float)
            return (hurwitz_zeta1(u, a, cfg) - zu) / a

        pts = [2.0**-k for k in range(1, 40)] + list(np.linspace(0.0, 1.0, int(4 * abs(u.imag)) + 17))
        lhs_res = integrate_finite(f_reg, 0.0, 1.0, cfg, initial_points=pts,
                                   abs_tol=1e-12, rel_tol=1e-10)

        def f_log(a: np.ndarray) -> np.ndarray:
            a = np.asarray(a, dtype=float)
            return np.log(a) * hurwitz_zeta1(u + 1.0, a, cfg)

        rhs_res = integrate_finite(f_log, 0.0, 1.0, cfg, initial_points=pts,
                                   abs_tol=1e-12, rel_tol=1e-10)
        return IdentityReport.build(
            "unit_recursion",
            {"u": u, "v": v, "mode": "limit"},
            lhs_res.value,
            u * rhs_res.value,
            lhs_res.evaluations + rhs_res.evaluations,
        )
    if v.real < 1.0:
        lhs_res = _weighted_unit_integral(-v, u, cfg)
        lhs = lhs_res.value
        mode = "direct"
    else:
        def f_sub(a: np.ndarray) -> np.ndarray:
            a = np.asarray(a, dtype=float)
            return (hurwitz_zeta1(u, a, cfg) - zu) / a

        res = integrate_unit_power_singular(f_sub, 1.0 - v, cfg, abs_tol=1e-12, rel_tol=1e-10)
        lhs = res.value + zu / (1.0 - v)
        lhs_res = res
        mode = "subtracted"
    w = _weighted_unit_integral(1.0 - v, u + 1.0, cfg)
    rhs = (zu - 1.0) / (1.0 - v) + u / (1.0 - v) * w.value
    return IdentityReport.build(
        "unit_recursion",
        {"u": u, "v": v, "mode": mode},
        lhs,
        rhs,
        lhs_res.evaluations + w.evaluations,
    )


# ---------------------------------------------------------------------------
# The explicit quadratic-moment identity and its asymptotic consequences.
# ---------------------------------------------------------------------------


def _katsurada_rhs_terms(u: complex, v: complex, cfg: EvalConfig) -> dict:
    zu = complex(riemann_zeta(u, cfg))
    zv = complex(riemann_zeta(v, cfg))
    gamma_term = complex(
        np.exp(lgamma(u + v - 1.0)) * riemann_zeta(u + v - 1.0, cfg)
        * (np.exp(lgamma(1.0 - v) - lgamma(u)) + np.exp(lgamma(1.0 - u) - lgamma(v)))
    )
    wu = _weighted_unit_integral(1.0 - v, u + 1.0, cfg)
    wv = _weighted_unit_integral(1.0 - u, v + 1.0, cfg)
    return {
        "rational": 1.0 / (u + v - 1.0),
        "gamma": gamma_term,
        "zeta_u": (zu - 1.0) / (v - 1.0),
        "zeta_v": (zv - 1.0) / (u - 1.0),
        "int_u": u / (v - 1.0) * wu.value,
        "int_v": v / (u - 1.0) * wv.value,
        "evals": wu.evaluations + wv.evaluations,
    }


def verify_katsurada(u: complex, v: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Explicit closed evaluation of the quadratic unit moment.

    The Gamma factor carries the cross arguments Gamma(1-v)/Gamma(u) +
    Gamma(1-u)/Gamma(v); with same-argument quotients the identity fails
    for complex conjugate pairs (checked against high-precision quadrature).
    """
    u = complex(u)
    v = complex(v)
    if not (1.0 < u.real < 2.0 and 1.0 < v.real < 2.0):
        raise DomainError("direct mode needs Re u, Re v in (1, 2)")
    if abs(u + v - 2.0) < 1e-12:
        raise PoleError("u + v = 2 pinches the rational and Gamma terms")
    terms = _katsurada_rhs_terms(u, v, cfg)
    lhs_res = _unit_moment_lhs((u, v), cfg)
    rhs = (terms["rational"] + terms["gamma"] + terms["zeta_u"] + terms["zeta_v"]
           + terms["int_u"] + terms["int_v"])
    return IdentityReport.build(
        "katsurada",
        {"u": u, "v": v},
        lhs_res.value,
        rhs,
        lhs_res.evaluations + terms["evals"],
    )


def katsurada_split_check(u: complex, v: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Term-level consistency: the weighted tail integral over [1, inf)
    equals the Mellin closed form minus the unit-interval recursion terms."""
    u = complex(u)
    v = complex(v)
    if not (1.0 < u.real < 2.0 and 1.0 < v.real < 2.0):
        raise DomainError("split check needs Re u, Re v in (1, 2)")
    direct = _weighted_tail(v, (u,), cfg)
    closed = complex(
        np.exp(lgamma(1.0 - v) + lgamma(u + v - 1.0) - lgamma(u))
        * riemann_zeta(u + v - 1.0, cfg)
    )
    zu = complex(riemann_zeta(u, cfg))
    w = _weighted_unit_integral(1.0 - v, u + 1.0, cfg)
    unit_part = (zu - 1.0) / (1.0 - v) + u / (1.0 - v) * w.value
    return IdentityReport.build(
        "katsurada_split",
        {"u": u, "v": v},
        direct.value,
        closed - unit_part,
        direct.evaluations + w.evaluations,
    )


def sum_recip_m_mp1u(u: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """sum_{m>=1} 1 / (m (m+1)^u), tail-certified by the binomial expansion
    of the comparison integral."""
    u = complex(u)
    M = max(512, int(math.ceil(6.0 * abs(u))))
    m = np.arange(1, M + 1, dtype=float)
    head = complex(np.sum(np.power(m + 1.0, -u) / m))
    # Euler-Maclaurin tail with f(x) = x^{-1} (1+x)^{-u}
    x0 = float(M + 1)

    def f(x: float) -> complex:
        return complex(x**-1.0 * (1.0 + x) ** -u)

    def fp(x: float) -> complex:
        return complex(-(x**-2.0) * (1.0 + x) ** -u - u * x**-1.0 * (1.0 + x) ** -(u + 1.0))

    # integral: int_x0^inf x^{-1-u} (1+1/x)^{-u} dx expanded binomially
    integral = 0j
    coef = 1.0 + 0j
    for j in range(24):
        integral += coef * x0 ** -(u + j) / (u + j)
        coef *= -(u + j) / (j + 1.0)
        if abs(coef) * x0 ** -(u.real + j + 1) < 1e-18:
            break
    return head + integral + f(x0) / 2.0 - fp(x0) / 12.0


def i1_asymptotic_check(t_grid, cfg: EvalConfig = DEFAULT_CONFIG) -> list[IdentityReport]:
    """Second-moment asymptotic: I_1(t) versus log(t/2pi) + gamma.

    The report parameters also carry the two explicit oscillating 1/t-scale
    corrections (the zeta-pair term and the unit-integral pair term) and
    the residual after removing them, whose t^2-scaled size is what really
    stays bounded.
    """
    out = []
    for t in t_grid:
        t = float(t)
        if t < 20.0:
            raise DomainError("asymptotic check needs t >= 20")
        i1 = afe.power_mean_Ik(1, t, cfg).value
        rhs = math.log(t / _2PI) + float(np.euler_gamma)
        u = complex(0.5, t)
        zu = complex(riemann_zeta(u, cfg))
        c_term = -2.0 * ((zu - 1.0) * u.conjugate()).real / abs(u) ** 2
        d_term = -2.0 * sum_recip_m_mp1u(u, cfg).imag / t
        diff = i1 - rhs
        corrected = diff - c_term - d_term
        out.append(
            IdentityReport.build(
                "i1_asymptotic",
                {
                    "t": t,
                    "diff": diff,
                    "diff_t2": diff * t * t,
                    "zeta_pair_term": c_term,
                    "unit_integral_pair_term": d_term,
                    "corrected_diff_t2": corrected * t * t,
                },
                i1,
                rhs,
            )
        )
    return out


def remark_219_check(u: complex, v: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Large-t behaviour of int_0^1 alpha^{1-v} zeta1(u+1, alpha) d(alpha)
    against (1/(it)) sum_m 1/(m (m+1)^u), for v = s1 - it, u = s2 + it."""
    u = complex(u)
    v = complex(v)
    t = u.imag
    s1 = v.real
    if not (0.0 < s1 < 2.0):
        raise DomainError("requires 0 < Re v < 2")
    if t <= 0.0 or abs(v.imag + t) > 1e-9:
        raise DomainError("requires u = s2 + it, v = s1 - it with the same t > 0")
    # alpha^{1-v} = alpha^{1-s1} e^{+i t log alpha}: smooth power times log phase
    def f_smooth(a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=float)
        return np.power(a, 1.0 - s1) * hurwitz_zeta1(u + 1.0, a, cfg)

    # log-oscillation toward 0: cut at delta with an explicit endpoint bound
    zmag = abs(complex(riemann_zeta(u + 1.0, cfg))) + 1.0
    delta = min(0.25, (1e-13 / zmag) ** (1.0 / (2.0 - s1)))
    head = integrate_oscillatory(
        f_smooth,
        OscSpec(0.0, log_coeff=t, note="alpha^{it} via log phase"),
        delta,
        1.0,
        cfg,
        abs_tol=1e-12,
        rel_tol=1e-9,
        extra_cycles=lambda a: t / (_2PI * (1.0 + a)) + 1.0,
    )
    lhs = head.value
    S = sum_recip_m_mp1u(u, cfg)
    rhs = S / (1j * t)
    resid = abs(lhs - rhs)
    return IdentityReport.build(
        "remark_219",
        {"u": u, "v": v, "t": t, "scaled_t2": resid * t * t,
         "endpoint_cut": delta, "lhs_abs": abs(lhs)},
        lhs,
        rhs,
        head.evaluations,
    )
