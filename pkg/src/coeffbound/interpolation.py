"""Interpolation at the roots of ``X**n -+ 1`` and evaluation functionals.

A functional ``l = sum_w u_w Ev_w`` on polynomials of degree ``< d`` with
nodes ``w**n = +-1`` has norm ``sum |u_w|`` as soon as ``d >= 2n - 1``; the
norm is attained by ``sum conj(u_w)/|u_w| L_w**2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .polykernel import Polynomial, poly_eval

NODE_ATOL = 1e-12


class Sign(str, enum.Enum):
    """Which node set: ``PLUS`` for ``w**n + 1 = 0``, ``MINUS`` for ``w**n - 1 = 0``."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def constant(self) -> int:
        # node polynomial is X**n + constant
        return 1 if self is Sign.PLUS else -1


def _as_sign(sign) -> Sign:
    return sign if isinstance(sign, Sign) else Sign(str(sign).lower())


def node_angles(n: int, sign) -> np.ndarray:
    sign = _as_sign(sign)
    k = np.arange(n)
    if sign is Sign.MINUS:
        return 2.0 * np.pi * k / n
    return np.pi * (2 * k + 1) / n


@dataclass(frozen=True)
class RootSet:
    n: int
    sign: Sign
    nodes: np.ndarray

    def index(self, omega: complex) -> int:
        dist = np.abs(self.nodes - omega)
        k = int(np.argmin(dist))
        if dist[k] > NODE_ATOL:
            raise ValueError(f"{omega!r} is not a node of the root set")
        return k

    def node_polynomial(self) -> Polynomial:
        return Polynomial.monomial(self.n) + self.sign.constant


def root_set(n: int, sign) -> RootSet:
    if n < 1:
        raise ValueError("n must be >= 1")
    sign = _as_sign(sign)
    nodes = np.exp(1j * node_angles(n, sign))
    # nodes on the axes are set exactly; angle = (pi/2) * num / n
    num = 4 * np.arange(n) if sign is Sign.MINUS else 2 * (2 * np.arange(n) + 1)
    on_axis = num % n == 0
    nodes[on_axis] = np.array([1, 1j, -1, -1j])[(num[on_axis] // n) % 4]
    nodes.setflags(write=False)
    return RootSet(n, sign, nodes)


def node_power(omega_set: RootSet, k: int, nu: int) -> complex:
    """``w_k**nu`` from the reduced exact angle, without repeated products."""
    n = omega_set.n
    if omega_set.sign is Sign.MINUS:
        return complex(np.exp(2j * np.pi * ((k * nu) % n) / n))
    # angle pi (2k+1) nu / n, reduced modulo 2 pi
    return complex(np.exp(1j * np.pi * (((2 * k + 1) * nu) % (2 * n)) / n))


def lagrange(omega_set: RootSet, omega: complex) -> Polynomial:
    """Lagrange interpolator ``L`` with ``L(omega) = 1`` and zero at the other nodes.

    Uses ``L = -c (X**n + c) / (X - omega) * omega / n`` where ``X**n + c`` is
    the node polynomial; the quotient comes from synthetic division.
    """
    k = omega_set.index(omega)
    w = omega_set.nodes[k]
    n = omega_set.n
    c = omega_set.sign.constant
    # synthetic division of X**n + c by (X - w), highest coefficient first
    quotient = np.zeros(n, dtype=complex)
    acc = 1.0 + 0j
    quotient[n - 1] = acc
    for j in range(n - 2, -1, -1):
        acc = acc * w
        quotient[j] = acc
    return Polynomial(quotient * (-c * w / n))


def lagrange_basis(omega_set: RootSet) -> list[Polynomial]:
    return [lagrange(omega_set, w) for w in omega_set.nodes]


def _check_circle(z: complex) -> None:
    if abs(abs(z) - 1.0) > 1e-12:
        raise ValueError("off-circle input: |z| must equal 1")


def partition_check(omega_set: RootSet, z: complex) -> float:
    """``sum_w |L_w(z)|**2``; identically 1 on the unit circle."""
    _check_circle(z)
    return math.fsum(abs(poly_eval(L, z)) ** 2 for L in lagrange_basis(omega_set))


@dataclass(frozen=True)
class IdentityReport:
    node_product: float
    node_second: float
    partial_fraction: float

    @property
    def max_discrepancy(self) -> float:
        return max(self.node_product, self.node_second, self.partial_fraction)


def identity_suite(omega_set: RootSet, z: complex) -> IdentityReport:
    """Check the node identities at every node and the partial-fraction one at ``z``.

    For each node ``w`` (with ``s = -c``, so ``s = +1`` on the ``MINUS`` set):

    * ``prod_{v != w} (w - v) = s n / w``
    * ``2 sum_{x != w} prod_{v != w, x} (w - v) = s (n - 1) n / w**2``

    and at ``z``: ``sum_w w / (z - w)**2 = s n**2 z**(n-1) / (z**n + c)**2``.
    """
    nodes = omega_set.nodes
    if np.min(np.abs(nodes - z)) <= NODE_ATOL:
        raise ValueError("pole: z coincides with a node")
    n = omega_set.n
    c = omega_set.sign.constant
    s = -c
    first = second = 0.0
    for i, w in enumerate(nodes):
        others = np.delete(nodes, i)
        diffs = w - others
        first = max(first, abs(np.prod(diffs) - s * n / w))
        total = 0j
        for j in range(others.size):
            total += np.prod(np.delete(diffs, j))
        second = max(second, abs(2 * total - s * (n - 1) * n / w**2))
    lhs = np.sum(nodes / (z - nodes) ** 2)
    rhs = s * n**2 * z ** (n - 1) / (z**n + c) ** 2
    return IdentityReport(float(first), float(second), float(abs(lhs - rhs)))


def orthogonality(omega_set: RootSet, nu: int) -> complex:
    """``sum_w w**nu`` evaluated directly."""
    return complex(sum(node_power(omega_set, k, nu) for k in range(omega_set.n)))


def orthogonality_closed_form(omega_set: RootSet, nu: int) -> int:
    n = omega_set.n
    if nu % n:
        return 0
    if omega_set.sign is Sign.MINUS:
        return n
    return n * (-1) ** ((nu // n) % 2)


@dataclass(frozen=True)
class EvalFunctional:
    """``l = sum_w u_w Ev_w`` restricted to polynomials of degree ``< d``."""

    omega_set: RootSet
    weights: np.ndarray
    d: int

    def __call__(self, f: Polynomial) -> complex:
        if f.degree >= self.d:
            raise ValueError("polynomial degree exceeds functional dimension")
        return complex(np.dot(self.weights, poly_eval(f, self.omega_set.nodes)))

    def monomial_values(self, count: int | None = None) -> np.ndarray:
        """``l(X**kappa)`` for ``kappa < count`` (default ``d``)."""
        count = self.d if count is None else count
        return np.array([
            sum(u * node_power(self.omega_set, k, kappa) for k, u in enumerate(self.weights))
            for kappa in range(count)
        ], dtype=complex)


def _certified(ell: EvalFunctional) -> None:
    if ell.d < 2 * ell.omega_set.n - 1:
        raise ValueError("norm formula not certified: need d >= 2n - 1")


def functional_norm(ell: EvalFunctional) -> float:
    _certified(ell)
    return math.fsum(np.abs(ell.weights))


def extremal_witness(ell: EvalFunctional, rel_zero: float = 1e-14) -> Polynomial:
    """Sup-norm-one polynomial of degree ``<= 2n - 2`` where ``|l|`` is attained.

    Weights below ``rel_zero`` times the largest weight count as zero and are
    left out of the sum.
    """
    _certified(ell)
    mags = np.abs(ell.weights)
    if mags.max(initial=0.0) == 0.0:
        raise ValueError("all weights are zero")
    total = Polynomial()
    cutoff = rel_zero * mags.max()
    for w, u, a in zip(ell.omega_set.nodes, ell.weights, mags):
        if a <= cutoff:
            continue
        L = lagrange(ell.omega_set, w)
        total = total + (np.conj(u) / a) * (L * L)
    return total


def extend_weights(t_half: Sequence[complex], d: int, sign) -> np.ndarray:
    """Extend ``t_0..t_{n-1}`` to length ``d``: periodic (``MINUS``) or
    anti-periodic with period ``2n`` (``PLUS``)."""
    sign = _as_sign(sign)
    t_half = np.asarray(t_half, dtype=complex)
    n = t_half.size
    nu = np.arange(d)
    out = t_half[nu % n]
    if sign is Sign.PLUS:
        out = out * np.where((nu // n) % 2, -1.0, 1.0)
    return out


def solve_weights(t: Sequence[complex], omega_set: RootSet, rtol: float = 1e-12) -> EvalFunctional:
    """Weights ``u`` with ``sum_w u_w w**kappa = t_kappa`` for every ``kappa < d``.

    ``t`` must repeat with period ``n`` on the ``MINUS`` set and flip sign
    every ``n`` steps on the ``PLUS`` set; then
    ``u_w = (1/n) sum_{nu < n} t_nu w**-nu`` solves the system.
    """
    t = np.asarray(t, dtype=complex)
    d = t.size
    n = omega_set.n
    if d < n:
        raise ValueError("weight vector shorter than the node count")
    scale = max(1.0, float(np.abs(t).max(initial=0.0)))
    expected = extend_weights(t[:n], d, omega_set.sign)
    if np.abs(expected - t).max(initial=0.0) > rtol * scale:
        raise ValueError("incompatible weight vector for this root set")
    u = np.array([
        sum(t[nu] * node_power(omega_set, k, -nu) for nu in range(n)) / n
        for k in range(n)
    ], dtype=complex)
    ell = EvalFunctional(omega_set, u, d)
    residual = linear_system_residual(ell, t)
    if residual > 1e-9 * scale:
        raise ArithmeticError(f"weight solve residual {residual:.3e} too large")
    return ell


def linear_system_residual(ell: EvalFunctional, t: Sequence[complex]) -> float:
    t = np.asarray(t, dtype=complex)
    return float(np.abs(ell.monomial_values(t.size) - t).max(initial=0.0))
