"""Eneström-Kakeya annulus and its quantitative growth envelopes.

All functions assume a polynomial with positive, non-increasing coefficients
``a_0 >= a_1 >= ... >= a_n > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .landau import p_n_exact
from .polykernel import Polynomial

# Relative slack when checking monotonicity of floating-point coefficients.
FLOAT_SLACK = 1e-14


class EKHypothesisError(ValueError):
    pass


class SingularPointError(ValueError):
    pass


@dataclass(frozen=True)
class EKProfile:
    coeffs: tuple
    r: float
    R: float

    @property
    def a0(self) -> float:
        return float(self.coeffs[0])

    @property
    def an(self) -> float:
        return float(self.coeffs[-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _real_coeffs(p) -> list:
    if isinstance(p, Polynomial):
        c = p.coeffs
        if c.size and abs(c.imag).max() > 0:
            raise EKHypothesisError("EK hypothesis fails: complex coefficients")
        return [float(x) for x in c.real]
    return list(p)


def ek_profile(p: Polynomial | Sequence) -> EKProfile:
    """Ratio extremes ``r = min Q`` and ``R = max Q`` with ``Q = {a_k / a_{k+1}}``.

    Exact rationals (``Fraction``/``int``) are checked with zero tolerance;
    floats get a relative slack of ``FLOAT_SLACK``.
    """
    a = _real_coeffs(p)
    if len(a) < 2:
        raise EKHypothesisError("EK hypothesis fails: degree must be at least 1")
    exact = all(isinstance(x, (Fraction, int)) for x in a)
    slack = 0 if exact else FLOAT_SLACK
    if any(x <= 0 for x in a):
        raise EKHypothesisError("EK hypothesis fails: coefficients must be positive")
    for k in range(len(a) - 1):
        if a[k + 1] > a[k] * (1 + slack):
            raise EKHypothesisError(
                f"EK hypothesis fails: a_{k + 1} = {a[k + 1]} exceeds a_{k} = {a[k]}")
    ratios = [Fraction(a[k]) / Fraction(a[k + 1]) if exact else a[k] / a[k + 1]
              for k in range(len(a) - 1)]
    # float slack may leave a ratio a hair below 1
    r = max(float(min(ratios)), 1.0)
    R = max(float(max(ratios)), r)
    return EKProfile(tuple(a), r, R)


def ek_annulus_check(p, roots: Sequence[complex], tol: float = 1e-8) -> bool:
    prof = ek_profile(p)
    return all(prof.r - tol <= abs(z) <= prof.R + tol for z in roots)


def ek_envelope_inner(profile: EKProfile, z: complex) -> tuple[float, float]:
    """Bracket ``|p(z)|`` for ``|z| <= r``."""
    r = profile.r
    if z == r:
        raise SingularPointError("singular point z = r")
    az = abs(z)
    if az > r:
        raise ValueError("inner envelope requires |z| <= r")
    den = abs(r - z)
    return profile.a0 * (r - az) / den, profile.a0 * (r + az) / den


def ek_envelope_outer(profile: EKProfile, z: complex) -> tuple[float, float]:
    """Bracket ``|p(z)|`` for ``|z| >= R``."""
    R = profile.R
    if z == R:
        raise SingularPointError("singular point z = R")
    az = abs(z)
    if az < R:
        raise ValueError("outer envelope requires |z| >= R")
    lead = profile.an * az**profile.degree
    den = abs(z - R)
    return lead * (az - R) / den, lead * (R + az) / den


def pole_distance_bound(n: int) -> float:
    """Lower bound ``1 + 1/(2n+1)`` on the root moduli of ``P_n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 1.0 + 1.0 / (2 * n + 1)


def decay_envelope(n: int, nu: int, K: float) -> float:
    if n < 1 or nu < 0 or K <= 0:
        raise ValueError("need n >= 1, nu >= 0, K > 0")
    return K * n**2 * math.exp(-nu * math.log1p(1 / (4 * n)))


def cauchy_coefficient_bound(n: int, nu: int) -> float:
    """Explicit bound on ``|b_{n,nu}|`` through Cauchy's estimate on ``|z| = rho``.

    Uses ``rho = 1 + 1/(4n)`` and bounds ``|P_n(1/z)|`` above and ``|P_n(z)|``
    below with the inner envelope, both points lying inside ``|z| <= r``.
    """
    if n < 1 or nu < 0:
        raise ValueError("need n >= 1, nu >= 0")
    prof = ek_profile(p_n_exact(n))
    rho = 1.0 + 1.0 / (4 * n)
    # over the circle, the upper envelope peaks at z = 1/rho and the lower
    # envelope bottoms out at z = -rho
    _, num_hi = ek_envelope_inner(prof, 1.0 / rho)
    den_lo, _ = ek_envelope_inner(prof, -rho)
    return rho ** (n - nu) * num_hi / den_lo
