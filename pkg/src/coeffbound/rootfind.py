"""Simultaneous root finding (Aberth-Ehrlich) and the r(n) diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .landau import binom_half, p_n
from .polykernel import Polynomial, as_polynomial, poly_eval

MAX_SWEEPS = 500
STEP_TOL = 1e-13
RESIDUAL_TOL = 1e-9
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


@dataclass(frozen=True)
class RootReport:
    roots: np.ndarray
    residuals: np.ndarray
    scales: np.ndarray
    sweeps: int
    converged: bool = True

    @property
    def min_modulus(self) -> float:
        return float(np.abs(self.roots).min())

    @property
    def max_relative_residual(self) -> float:
        return float((self.residuals / self.scales).max())


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, report: RootReport):
        super().__init__(message)
        self.report = report


def _derivative(c: np.ndarray) -> np.ndarray:
    return c[1:] * np.arange(1, c.size)


def _sort_roots(z: np.ndarray) -> np.ndarray:
    # round the modulus so conjugate pairs order by phase, not by noise
    keys = sorted(range(z.size), key=lambda k: (round(abs(z[k]), 10), math.atan2(z[k].imag, z[k].real)))
    return z[keys]


def find_roots(p: Polynomial, max_sweeps: int = MAX_SWEEPS) -> RootReport:
    """All complex roots of ``p`` by Aberth-Ehrlich iteration.

    Starting points lie on the circle of radius ``|a_0/a_n|**(1/deg)`` with
    a golden-angle phase offset.  Iteration stops once every correction is
    below ``STEP_TOL`` relative to the root size; each root then gets one
    Newton polishing step.
    """
    p = as_polynomial(p)
    deg = p.degree
    if deg < 1:
        raise ValueError("polynomial must have degree >= 1")
    c = p.coeffs

    nz = np.flatnonzero(c)
    low = nz[0]
    # roots at the origin are exact; deflate them
    zeros_at_origin = np.zeros(low, dtype=complex)
    core = Polynomial(c[low:])
    m = core.degree

    if m == 0:
        z = np.zeros(0, dtype=complex)
        sweeps = 0
        converged = True
    else:
        cc = core.coeffs
        dcore = Polynomial(_derivative(cc))
        radius = abs(cc[0] / cc[-1]) ** (1.0 / m)
        k = np.arange(m)
        z = radius * np.exp(1j * (2 * np.pi * k / m + GOLDEN_ANGLE / m + 0.5 * GOLDEN_ANGLE))
        converged = False
        sweeps = 0
        for sweeps in range(1, max_sweeps + 1):
            pv = poly_eval(core, z)
            dv = poly_eval(dcore, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = np.where(pv == 0, 0.0, pv / dv)
                step = np.where(pv == 0, 0.0, ratio / (1.0 - ratio * s))
            if not np.all(np.isfinite(step)):
                step = np.where(np.isfinite(step), step, 1e-3 * (1 + np.abs(z)))
            z = z - step
            if np.max(np.abs(step) / np.maximum(1.0, np.abs(z))) < STEP_TOL:
                converged = True
                break
        # one Newton polishing step
        pv = poly_eval(core, z)
        dv = poly_eval(dcore, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            z = z - np.where(dv != 0, pv / dv, 0.0)

    roots = _sort_roots(np.concatenate([zeros_at_origin, z]))
    residuals = np.abs(poly_eval(p, roots))
    scales = np.maximum(poly_eval(Polynomial(np.abs(c)), np.abs(roots)).real, np.finfo(float).tiny)
    report = RootReport(roots, residuals, scales, sweeps, converged)
    if not converged:
        raise ConvergenceError(f"Aberth iteration did not converge in {max_sweeps} sweeps", report)
    return report


def r_of_n(n: int) -> float:
    """Smallest root modulus of ``P_n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return find_roots(p_n(n)).min_modulus


@dataclass(frozen=True)
class RootBoundReport:
    n: int
    lower: float
    upper: float
    r: float

    @property
    def holds(self) -> bool:
        return self.lower <= self.r <= self.upper

    @property
    def scaled_gap(self) -> float:
        """``(r(n) - 1) n``, the quantity whose growth order is open."""
        return (self.r - 1.0) * self.n


def root_bound_report(n: int) -> RootBoundReport:
    if n < 2:
        raise ValueError("n must be >= 2")
    lower = 1.0 + 1.0 / (2 * n + 1)
    upper = (2.0 * math.sqrt(math.pi * n)) ** (1.0 / n)
    return RootBoundReport(n, lower, upper, r_of_n(n))


def vieta_product_check(n: int) -> tuple[float, float]:
    """``(prod |roots of P_n|, 1/|binom(-1/2, n)|)``."""
    roots = find_roots(p_n(n)).roots
    return float(np.prod(np.abs(roots))), float(1 / abs(binom_half(n)))
