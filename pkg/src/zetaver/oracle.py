"""Extended-precision oracle tier (>= 100 significand bits, via mpmath).

Used to cross-check the double-precision pipeline: same quantities, fully
independent evaluation route.  Precision is set per call and restored.
"""

from __future__ import annotations

import contextlib
import math

import mpmath as mp

DEFAULT_PREC_BITS = 120


@contextlib.contextmanager
def _precision(prec_bits: int):
    old = mp.mp.prec
    mp.mp.prec = prec_bits
    try:
        yield
    finally:
        mp.mp.prec = old


def gamma(z: complex, prec_bits: int = DEFAULT_PREC_BITS) -> complex:
    with _precision(prec_bits):
        return complex(mp.gamma(mp.mpc(z)))


def lgamma(z: complex, prec_bits: int = DEFAULT_PREC_BITS) -> complex:
    with _precision(prec_bits):
        return complex(mp.loggamma(mp.mpc(z)))


def riemann_zeta(s: complex, prec_bits: int = DEFAULT_PREC_BITS) -> complex:
    with _precision(prec_bits):
        return complex(mp.zeta(mp.mpc(s)))


def hurwitz_zeta1(s: complex, alpha: float, prec_bits: int = DEFAULT_PREC_BITS) -> complex:
    with _precision(prec_bits):
        return complex(mp.zeta(mp.mpc(s), 1 + mp.mpf(alpha)))


def hurwitz_zeta(s: complex, alpha: float, prec_bits: int = DEFAULT_PREC_BITS) -> complex:
    with _precision(prec_bits):
        return complex(mp.zeta(mp.mpc(s), mp.mpf(alpha)))


def chi(s: complex, prec_bits: int = DEFAULT_PREC_BITS) -> complex:
    with _precision(prec_bits):
        sm = mp.mpc(s)
        return complex(2**sm * mp.pi ** (sm - 1) * mp.sin(mp.pi * sm / 2) * mp.gamma(1 - sm))


def fourier_coeff_a(n: int, s: complex, prec_bits: int = DEFAULT_PREC_BITS) -> complex:
    with _precision(prec_bits):
        if n == 0:
            return complex(1 / (mp.mpc(s) - 1))
        sm = mp.mpc(s)
        w = 2j * mp.pi * n
        return complex(mp.gammainc(1 - sm, w) * w ** (sm - 1))


def unit_interval_quad(f, prec_bits: int = DEFAULT_PREC_BITS, points=None) -> complex:
    """High-precision quadrature of f over [0, 1] (f receives mpmath types)."""
    with _precision(prec_bits):
        pts = points if points is not None else [0, 1]
        return complex(mp.quad(f, pts))


def zeta1_square_integral(s: complex, prec_bits: int = DEFAULT_PREC_BITS,
                          subdivisions: int = 16) -> float:
    """int_0^1 |zeta1(s, alpha)|^2 d(alpha) in extended precision."""
    with _precision(prec_bits):
        sm = mp.mpc(s)
        f = lambda a: abs(mp.zeta(sm, 1 + a)) ** 2
        t = abs(float(s.imag))
        n = max(subdivisions, int(2.5 * (t / (2 * math.pi) + math.sqrt(t / (2 * math.pi) + 1))) + 2)
        return float(mp.quad(f, mp.linspace(0, 1, n)))
