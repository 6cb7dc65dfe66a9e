"""Bounds for ``|t_0 a_0 + ... + t_{d-1} a_{d-1}|`` over the unit ball.

``bound_plus`` and ``bound_minus`` are sharp and come with a witness
polynomial.  ``combined_bound`` handles an arbitrary ``t`` by splitting it
into a periodic and an anti-periodic part; it is an upper bound only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .interpolation import (
    EvalFunctional,
    Sign,
    extend_weights,
    extremal_witness,
    functional_norm,
    root_set,
    solve_weights,
)
from .polykernel import DEFAULT_TOL, Polynomial, as_polynomial, sup_norm_circle

METHODS = ("newman", "thm_plus", "thm_minus", "combined")


@dataclass(frozen=True)
class WeightVector:
    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=complex).ravel()
        if e.size == 0:
            raise ValueError("weight vector must have at least one entry")
        object.__setattr__(self, "entries", e)

    @property
    def d(self) -> int:
        return self.entries.size

    def apply(self, f: Polynomial) -> complex:
        f = as_polynomial(f)
        if f.degree >= self.d:
            raise ValueError("polynomial degree exceeds weight dimension")
        return complex(np.dot(self.entries[: len(f)], f.coeffs))


def _pairs(z: Sequence[complex]) -> list[list[float]]:
    return [[float(np.real(x)), float(np.imag(x))] for x in z]


def _unpairs(rows) -> np.ndarray:
    return np.array([complex(re, im) for re, im in rows], dtype=complex)


@dataclass(frozen=True)
class BoundCertificate:
    value: float
    method: str
    d: int
    weights: EvalFunctional | None = None
    witness: Polynomial | None = None
    sharp: bool = False
    parts: tuple["BoundCertificate", ...] = field(default=())

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "method": self.method,
            "value": self.value,
            "d": self.d,
            "sharp": self.sharp,
            "weights": None,
            "witness": None,
        }
        if self.weights is not None:
            out["weights"] = {
                "sign": self.weights.omega_set.sign.value,
                "n": self.weights.omega_set.n,
                "nodes": _pairs(self.weights.omega_set.nodes),
                "u": _pairs(self.weights.weights),
            }
        if self.witness is not None:
            out["witness"] = _pairs(self.witness.coeffs)
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "BoundCertificate":
        weights = None
        if data.get("weights"):
            w = data["weights"]
            omega_set = root_set(int(w["n"]), w["sign"])
            weights = EvalFunctional(omega_set, _unpairs(w["u"]), int(data["d"]))
        witness = Polynomial(_unpairs(data["witness"])) if data.get("witness") else None
        parts = tuple(cls.from_dict(p) for p in data.get("parts", ()))
        return cls(float(data["value"]), data["method"], int(data["d"]), weights,
                   witness, bool(data["sharp"]), parts)


def newman_bound(n: int) -> float:
    """``1/2 + (1/n) sum_{w**n = -1} 1/|w - 1|``, via the sine form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = (1.0 / math.sin(math.pi * (2 * k + 1) / (2 * n)) for k in range(n))
    return 0.5 + math.fsum(terms) / (2 * n)


def _sharp_bound(t_half, d: int, sign: Sign, method: str) -> BoundCertificate:
    t_half = np.asarray(t_half, dtype=complex).ravel()
    n = t_half.size
    if n < 1:
        raise ValueError("t_half must be non-empty")
    if d < 2 * n - 1:
        raise ValueError(f"need d >= 2n - 1 = {2 * n - 1}, got d = {d}")
    ell = solve_weights(extend_weights(t_half, d, sign), root_set(n, sign))
    value = functional_norm(ell)
    witness = extremal_witness(ell) if value > 0 else None
    return BoundCertificate(value, method, d, ell, witness, sharp=witness is not None)


def bound_plus(t_half: Sequence[complex], d: int) -> BoundCertificate:
    """Sharp bound for ``t`` anti-periodic with period ``2n`` (nodes ``w**n = -1``)."""
    return _sharp_bound(t_half, d, Sign.PLUS, "thm_plus")


def bound_minus(t_half: Sequence[complex], d: int) -> BoundCertificate:
    """Sharp bound for ``t`` periodic with period ``n`` (nodes ``w**n = 1``)."""
    return _sharp_bound(t_half, d, Sign.MINUS, "thm_minus")


def cute_inequality_check(f: Polynomial, k: int, n: int,
                          tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """``(|a_k| + |a_{n+k}|, ||f||_inf)`` for ``deg f < 2n + k``."""
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    f = as_polynomial(f)
    if f.degree >= 2 * n + k:
        raise ValueError("degree too large: need deg f < 2n + k")
    return abs(f.coeff(k)) + abs(f.coeff(n + k)), sup_norm_circle(f, tol)


def cute_witness(k: int, n: int) -> Polynomial:
    """Polynomial of degree ``<= 2n - 2`` with ``|a_k| + |a_{n+k}| = ||f|| = 1``."""
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    e = np.zeros(n)
    e[k] = 1.0
    return bound_minus(e, 2 * n + k).witness


def combined_period(d: int) -> int:
    """``D``: ``d`` itself when even, ``d + 1`` when odd."""
    return d if d % 2 == 0 else d + 1


def _root_sum(t: np.ndarray, D: int, js: np.ndarray) -> float:
    # sum over w = exp(2 pi i j / D), j in js, of |sum_nu t_nu w**-nu|
    nu = np.arange(t.size)
    ang = (-2.0 * np.pi / D) * ((js[:, None] * nu[None, :]) % D)
    terms = t[None, :] * np.exp(1j * ang)
    moduli = [abs(complex(math.fsum(row.real), math.fsum(row.imag))) for row in terms]
    return math.fsum(moduli)


def combined_value(t: Sequence[complex]) -> float:
    """``(1/D) sum_{w**D = 1} |sum_nu t_nu / w**nu|``."""
    t = np.asarray(t, dtype=complex).ravel()
    d = t.size
    if d == 0:
        raise ValueError("empty weight vector")
    if d == 1:
        return float(abs(t[0]))
    D = combined_period(d)
    return _root_sum(t, D, np.arange(D)) / D


def split_weights(t: Sequence[complex]) -> tuple[np.ndarray, np.ndarray, int]:
    """Half-vectors of the periodic and anti-periodic parts of ``t``."""
    t = np.asarray(t, dtype=complex).ravel()
    D = combined_period(t.size)
    n = D // 2
    padded = np.zeros(D, dtype=complex)
    padded[: t.size] = t
    periodic = (padded[:n] + padded[n:]) / 2
    antiperiodic = (padded[:n] - padded[n:]) / 2
    return periodic, antiperiodic, n


def combined_bound(t: WeightVector | Sequence[complex], split: bool = True) -> BoundCertificate:
    """Upper bound for an arbitrary weight vector; not sharp in general.

    The value is the roots-of-unity formula.  With ``split=True`` the two
    sharp certificates for the periodic and anti-periodic parts are attached
    as ``parts``; their values sum to the same number.
    """
    entries = t.entries if isinstance(t, WeightVector) else np.asarray(t, dtype=complex).ravel()
    d = entries.size
    value = combined_value(entries)
    parts: tuple[BoundCertificate, ...] = ()
    if split and d >= 2:
        periodic, antiperiodic, _ = split_weights(entries)
        parts = (bound_minus(periodic, d), bound_plus(antiperiodic, d))
    return BoundCertificate(value, "combined", d, sharp=False, parts=parts)


def combined_split_value(t: Sequence[complex]) -> float:
    """The same bound obtained as the sum of the two sharp part bounds."""
    t = np.asarray(t, dtype=complex).ravel()
    if t.size == 1:
        return float(abs(t[0]))
    periodic, antiperiodic, _ = split_weights(t)
    d = t.size
    return bound_minus(periodic, d).value + bound_plus(antiperiodic, d).value


def shapiro_weights(n: int, d: int) -> np.ndarray:
    if not 0 <= n < d:
        raise ValueError("need 0 <= n < d")
    t = np.zeros(d)
    t[: n + 1] = 1.0
    return t


def shapiro_C(n: int, d: int) -> float:
    """Combined bound for ``|a_0 + ... + a_n|`` on polynomials of degree ``< d``."""
    return combined_value(shapiro_weights(n, d))
