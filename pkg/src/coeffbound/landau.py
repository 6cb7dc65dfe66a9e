"""Landau's bound, the polynomial P_n and its rational extremal function.

``f_n = rev(P_n) / P_n`` is kept as the coefficient pair and never factored;
its Taylor coefficients come from truncated series inversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .polykernel import (
    DEFAULT_TOL,
    Polynomial,
    exact_mul_truncated,
    exact_series_invert,
    poly_mul_truncated,
    series_invert,
    sup_norm_circle,
)

# Frozen decay constant for |b_{n,nu}| <= K n^2 (1 + 1/(4n))^-nu.  The sweep
# n <= 30, nu <= 2000 (see calibrate_decay_constant) peaks at 0.9375, attained
# at n = 1, nu = 1; K carries 2x headroom over that.
DECAY_K = 1.875


@dataclass(frozen=True)
class LandauBound:
    n: int
    value_exact: Fraction
    value_float: float


@dataclass(frozen=True)
class TaylorTable:
    n: int
    coeffs: np.ndarray
    exact: tuple[Fraction, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class NearExtremal:
    n: int
    d: int
    poly: Polynomial
    supnorm: float
    coeff_sum_head: complex

    @property
    def ratio(self) -> float:
        """``|head sum| / L_n``; tends to 1 as ``d`` grows."""
        return abs(self.coeff_sum_head) / landau_bound(self.n).value_float


def _check_index(n: int, minimum: int = 0) -> None:
    if not isinstance(n, (int, np.integer)) or n < minimum:
        raise ValueError(f"index must be an integer >= {minimum}, got {n!r}")


def binom_half(nu: int) -> Fraction:
    """Exact ``binom(-1/2, nu) = (-1)**nu C(2 nu, nu) / 4**nu``."""
    _check_index(nu)
    return Fraction((-1) ** nu * math.comb(2 * nu, nu), 4**nu)


@lru_cache(maxsize=None)
def _landau_numerators(n: int) -> tuple[int, ...]:
    # L_nu = N_nu / 16**nu with N_nu = 16 N_{nu-1} + C(2nu, nu)**2
    out = [1]
    c = 1
    for nu in range(1, n + 1):
        c = c * 2 * (2 * nu - 1) // nu  # C(2nu, nu), exact
        out.append(16 * out[-1] + c * c)
    return tuple(out)


def landau_bound(n: int) -> LandauBound:
    _check_index(n)
    value = Fraction(_landau_numerators(n)[n], 16**n)
    return LandauBound(n, value, float(value))


def landau_values(nmax: int) -> np.ndarray:
    """Floats ``L_0..L_nmax``, each rounded once from its exact value."""
    _check_index(nmax)
    nums = _landau_numerators(nmax)
    # int / int true division is correctly rounded
    return np.array([x / 16**k for k, x in enumerate(nums)])


def p_n_exact(n: int) -> list[Fraction]:
    _check_index(n)
    return [Fraction(math.comb(2 * nu, nu), 4**nu) for nu in range(n + 1)]


def p_n(n: int) -> Polynomial:
    """``P_n(z) = sum binom(-1/2, nu) (-z)**nu``; all coefficients positive."""
    return Polynomial([float(c) for c in p_n_exact(n)])


def taylor_f_n(n: int, m: int, exact: bool = False) -> TaylorTable:
    """First ``m`` Taylor coefficients of ``f_n`` about the origin.

    With ``exact=True`` the coefficients are also computed in rational
    arithmetic (kept for ``m <= 200``; bit sizes grow linearly in ``m``).
    """
    _check_index(n, 1)
    _check_index(m, 1)
    if exact:
        if m > 200:
            raise ValueError("exact Taylor table limited to m <= 200")
        pn = p_n_exact(n)
        b = exact_mul_truncated(pn[::-1], exact_series_invert(pn, m), m)
        b += [Fraction(0)] * (m - len(b))
        return TaylorTable(n, np.array([float(x) for x in b]), tuple(b))
    pn = p_n(n)
    b = poly_mul_truncated(pn.reversed(), series_invert(pn, m), m).coeffs.real
    out = np.zeros(m)
    out[: b.size] = b
    return TaylorTable(n, out)


def calibrate_decay_constant(nmax: int = 30, numax: int = 2000) -> tuple[float, int, int]:
    """Largest ``|b_{n,nu}| (1+1/(4n))**nu / n**2`` over the sweep, with its argmax."""
    best = (0.0, 0, 0)
    nu = np.arange(numax + 1)
    for n in range(1, nmax + 1):
        b = taylor_f_n(n, numax + 1).coeffs
        scaled = np.abs(b) * np.exp(nu * math.log1p(1 / (4 * n))) / n**2
        k = int(np.argmax(scaled))
        if scaled[k] > best[0]:
            best = (float(scaled[k]), n, k)
    return best


def near_extremal(n: int, d: int, tol: float = DEFAULT_TOL) -> NearExtremal:
    """Truncate ``f_n`` to degree ``< d`` and normalise to sup-norm one."""
    _check_index(n, 1)
    if d <= n:
        raise ValueError("need d > n")
    b = taylor_f_n(n, d).coeffs
    truncated = Polynomial(b)
    norm = sup_norm_circle(truncated, tol)
    poly = truncated / norm
    head = complex(math.fsum(b[: n + 1]) / norm)
    return NearExtremal(n, d, poly, sup_norm_circle(poly, tol), head)
