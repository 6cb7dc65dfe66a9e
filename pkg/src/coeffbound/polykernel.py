"""Dense polynomial arithmetic over C, plus the exact-rational helpers.

Coefficients are stored lowest degree first.  The zero polynomial is the
empty coefficient vector.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

DEFAULT_TOL = 1e-10

# Relative slack used to pick which sampled local maxima get refined.  With
# 64x oversampling of a degree-m trigonometric polynomial the gap between the
# sampled and the true maximum is below (pi/64)**2 / 2 ~ 1.2e-3.
_CANDIDATE_SLACK = 1e-2
_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


class Polynomial:
    """Immutable dense polynomial with complex double coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Sequence[complex] | np.ndarray = ()):
        if isinstance(coeffs, np.ndarray):
            c = np.array(coeffs, dtype=complex)
        else:
            c = np.array([complex(x) for x in coeffs], dtype=complex)
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if not np.all(np.isfinite(c)):
            raise ValueError("non-finite coefficient")
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:0]
        c.setflags(write=False)
        self._c = c

    @classmethod
    def monomial(cls, k: int, c: complex = 1.0) -> "Polynomial":
        a = np.zeros(k + 1, dtype=complex)
        a[k] = c
        return cls(a)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        """Index of the last stored coefficient; -1 for the zero polynomial."""
        return self._c.size - 1

    @property
    def is_zero(self) -> bool:
        return self._c.size == 0

    def coeff(self, k: int) -> complex:
        return complex(self._c[k]) if 0 <= k < self._c.size else 0j

    def reversed(self, degree: int | None = None) -> "Polynomial":
        """Return X**degree * p(1/X), i.e. the coefficient sequence reversed."""
        m = self.degree if degree is None else degree
        if m < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        a = np.zeros(m + 1, dtype=complex)
        a[: self._c.size] = self._c
        return Polynomial(a[::-1])

    def __call__(self, z):
        return poly_eval(self, z)

    def __len__(self) -> int:
        return self._c.size

    def _binary(self, other, op):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        n = max(self._c.size, other._c.size)
        a = np.zeros(n, dtype=complex)
        b = np.zeros(n, dtype=complex)
        a[: self._c.size] = self._c
        b[: other._c.size] = other._c
        return Polynomial(op(a, b))

    def __add__(self, other):
        return self._binary(other, np.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Polynomial(-self._c)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            return Polynomial(np.convolve(self._c, other._c))
        return Polynomial(self._c * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Polynomial(self._c / complex(scalar))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._c.shape == other._c.shape and bool(np.all(self._c == other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def allclose(self, other: "Polynomial", atol: float = 1e-12) -> bool:
        n = max(len(self), len(other))
        a = np.zeros(n, dtype=complex)
        b = np.zeros(n, dtype=complex)
        a[: len(self)] = self._c
        b[: len(other)] = other._c
        return bool(np.all(np.abs(a - b) <= atol))

    def __repr__(self):
        return f"Polynomial({self._c.tolist()!r})"


def as_polynomial(p) -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial(p)


def poly_eval(p: Polynomial, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    c = p.coeffs
    if np.ndim(z) == 0:
        acc = 0j
        for a in c[::-1]:
            acc = acc * z + a
        return complex(acc)
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for a in c[::-1]:
        acc = acc * z + a
    return acc


def _circle_samples(p: Polynomial, count: int) -> np.ndarray:
    # p(exp(2 pi i k / count)) for k = 0..count-1
    buf = np.zeros(count, dtype=complex)
    buf[: len(p)] = p.coeffs
    return np.fft.ifft(buf) * count


def sup_norm_circle(p: Polynomial, tol: float = DEFAULT_TOL) -> float:
    """Estimate ``max |p(z)|`` over the unit circle.

    ``|p|**2`` is sampled at ``max(4096, 64 (deg+1))`` equispaced points and
    every sampled local maximum that could still hold the global maximum is
    refined by golden-section search down to an arc width of ``tol/deg``.
    The returned value is always an attained value of ``|p|``, so it never
    overshoots the true maximum beyond rounding.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = as_polynomial(p)
    if p.is_zero:
        return 0.0
    return float(sup_norm_circle_many(p.coeffs[None, :], tol)[0])


_CHUNK_ROWS = 256


def sup_norm_circle_many(coeffs, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Row-wise :func:`sup_norm_circle` for a stack of coefficient vectors.

    All rows share one length (pad with zeros); the sample count and the
    refinement width follow that common length.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    c = np.atleast_2d(np.asarray(coeffs, dtype=complex))
    if c.ndim != 2:
        raise ValueError("expected a 2-d stack of coefficient rows")
    if not np.all(np.isfinite(c)):
        raise ValueError("non-finite coefficient")
    out = np.zeros(c.shape[0])
    if c.shape[1] == 0:
        return out
    big = np.abs(c).max(axis=1)
    live = np.flatnonzero(big > 0)
    # scale each row by a power of two (exact) so |p|**2 neither underflows nor overflows
    exp = np.frexp(big[live])[1][:, None]
    scaled = np.ldexp(c[live].real, -exp) + 1j * np.ldexp(c[live].imag, -exp)
    if c.shape[1] == 1:
        peak = np.abs(scaled[:, 0])
    else:
        peak = np.concatenate([_refined_max(scaled[i:i + _CHUNK_ROWS], tol)
                               for i in range(0, live.size, _CHUNK_ROWS)] or [np.zeros(0)])
    out[live] = np.ldexp(peak, exp[:, 0])
    return out


def _refined_max(c: np.ndarray, tol: float) -> np.ndarray:
    rows, width = c.shape
    deg = width - 1
    count = max(4096, 64 * width)
    buf = np.zeros((rows, count), dtype=complex)
    buf[:, :width] = c
    mag2 = np.abs(np.fft.ifft(buf, axis=1) * count) ** 2
    top = mag2.max(axis=1)
    is_peak = (mag2 >= np.roll(mag2, 1, axis=1)) & (mag2 >= np.roll(mag2, -1, axis=1))
    row, k = np.nonzero(is_peak & (mag2 >= top[:, None] * (1.0 - _CANDIDATE_SLACK)))

    # golden-section search on every (row, peak) pair at once
    pc = c[row]
    step = 2.0 * np.pi / count
    lo = k * step - step
    hi = k * step + step

    def g(theta):
        z = np.exp(1j * theta)
        acc = np.zeros_like(z)
        for j in range(deg, -1, -1):
            acc = acc * z + pc[:, j]
        return np.abs(acc) ** 2

    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    g1, g2 = g(x1), g(x2)
    best = top.copy()
    np.maximum.at(best, row, np.maximum(g1, g2))
    width_stop = tol / deg
    while row.size and float((hi - lo).max()) > width_stop:
        left = g1 >= g2
        # keep [lo, x2] where the left probe wins, [x1, hi] otherwise
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
        new_x1 = np.where(left, hi - _INVPHI * (hi - lo), x2)
        new_x2 = np.where(left, x1, lo + _INVPHI * (hi - lo))
        new_g1 = np.where(left, np.nan, g2)
        new_g2 = np.where(left, g1, np.nan)
        gf = g(np.where(left, new_x1, new_x2))
        g1 = np.where(left, gf, new_g1)
        g2 = np.where(left, new_g2, gf)
        x1, x2 = new_x1, new_x2
        np.maximum.at(best, row, gf)
    return np.sqrt(best)


def _invert_coeffs(c: Sequence, terms: int, zero):
    if terms < 1:
        raise ValueError("terms must be positive")
    if len(c) == 0 or c[0] == 0:
        raise ZeroDivisionError("non-invertible series")
    inv0 = 1 / c[0]
    q = [inv0]
    deg = len(c) - 1
    for m in range(1, terms):
        acc = zero
        for k in range(1, min(m, deg) + 1):
            acc += c[k] * q[m - k]
        q.append(-inv0 * acc)
    return q


def series_invert(p: Polynomial, terms: int) -> Polynomial:
    """Truncated reciprocal ``q`` with ``p q = 1 mod X**terms``."""
    p = as_polynomial(p)
    if p.is_zero or p.coeffs[0] == 0:
        raise ZeroDivisionError("non-invertible series")
    if terms < 1:
        raise ValueError("terms must be positive")
    c = p.coeffs
    deg = p.degree
    inv0 = 1.0 / c[0]
    q = np.zeros(terms, dtype=complex)
    q[0] = inv0
    tail = c[1:]
    for m in range(1, terms):
        k = min(m, deg)
        # sum_{j=1..k} c_j q_{m-j}
        q[m] = -inv0 * np.dot(tail[:k], q[m - 1 :: -1][:k]) if k else 0
    return Polynomial(q)


def poly_mul_truncated(p: Polynomial, q: Polynomial, terms: int) -> Polynomial:
    p, q = as_polynomial(p), as_polynomial(q)
    if p.is_zero or q.is_zero or terms <= 0:
        return Polynomial()
    return Polynomial(np.convolve(p.coeffs[:terms], q.coeffs[:terms])[:terms])


def contour_coeff_sum(f: Polynomial, kernel: Polynomial, n: int, samples: int) -> complex:
    """Coefficient of ``z**n`` in ``f * kernel`` via the trapezoidal rule.

    Approximates ``(1/2 pi i) \\oint f(z) kernel(z) z**-(n+1) dz`` on the unit
    circle with ``samples`` nodes, which is exact for Laurent polynomials once
    ``samples > deg f + deg kernel + n``.
    """
    f, kernel = as_polynomial(f), as_polynomial(kernel)
    if f.is_zero or kernel.is_zero:
        return 0j
    if samples <= f.degree + kernel.degree + n:
        raise ValueError("aliasing: too few samples for exact quadrature")
    k = np.arange(samples)
    # z_k**-n via exact angle reduction
    zn = np.exp(-2j * np.pi * ((k * n) % samples) / samples)
    vals = _circle_samples(f, samples) * _circle_samples(kernel, samples) * zn
    return complex(np.mean(vals))


# -- exact rational helpers -------------------------------------------------

def exact_mul_truncated(a: Sequence[Fraction], b: Sequence[Fraction], terms: int) -> list[Fraction]:
    out = [Fraction(0)] * max(0, min(terms, len(a) + len(b) - 1))
    for i, x in enumerate(a[:terms]):
        if x == 0:
            continue
        for j, y in enumerate(b[: terms - i]):
            out[i + j] += x * y
    return out


def exact_series_invert(a: Sequence[Fraction], terms: int) -> list[Fraction]:
    return _invert_coeffs(list(a), terms, Fraction(0))
