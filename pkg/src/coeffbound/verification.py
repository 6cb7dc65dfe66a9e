"""Randomised identity suites behind ``coeffbound verify``.

Each suite returns a :class:`SuiteResult` with the largest residual seen and,
on failure, the first counterexample in JSON-friendly form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .enestrom_kakeya import ek_envelope_inner, ek_envelope_outer, ek_profile
from .functional_bounds import bound_minus, bound_plus, cute_witness
from .interpolation import (
    Sign,
    identity_suite,
    lagrange_basis,
    orthogonality,
    orthogonality_closed_form,
    root_set,
)
from .landau import binom_half, p_n, p_n_exact
from .polykernel import Polynomial, exact_mul_truncated, poly_eval, sup_norm_circle, sup_norm_circle_many
from .rootfind import find_roots

DEFAULT_SEED = 20240917


@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_residual: float
    checked: int
    counterexample: dict[str, Any] | None = field(default=None)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


class _Tracker:
    def __init__(self, name: str, tol: float):
        self.name, self.tol = name, tol
        self.worst = 0.0
        self.checked = 0
        self.counterexample = None

    def record(self, residual: float, **context) -> None:
        self.checked += 1
        self.worst = max(self.worst, residual)
        if residual > self.tol and self.counterexample is None:
            self.counterexample = {"residual": residual, **context}

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.counterexample is None, self.worst,
                           self.checked, self.counterexample)


def random_circle_points(rng: np.random.Generator, count: int) -> np.ndarray:
    return np.exp(2j * np.pi * rng.random(count))


def random_monotone_coeffs(rng: np.random.Generator, max_degree: int = 12) -> np.ndarray:
    deg = int(rng.integers(1, max_degree + 1))
    steps = rng.uniform(0.05, 1.0, size=deg)
    return np.concatenate([[1.0], np.cumprod(steps)]) * rng.uniform(0.5, 5.0)


def partition_suite(nmax: int = 25, points: int = 1000, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = np.random.default_rng(seed)
    tr = _Tracker("partition", 1e-11)
    for n in range(1, nmax + 1):
        for sign in Sign:
            z = random_circle_points(rng, points)
            total = sum(np.abs(poly_eval(L, z)) ** 2 for L in lagrange_basis(root_set(n, sign)))
            k = int(np.argmax(np.abs(total - 1)))
            tr.record(float(abs(total[k] - 1)), n=n, sign=sign.value,
                      z=[float(z[k].real), float(z[k].imag)])
    return tr.result()


def identities_suite(nmax: int = 25, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = np.random.default_rng(seed)
    tr = _Tracker("identities", 1e-9)
    for n in range(1, nmax + 1):
        for sign in Sign:
            z = complex(*(rng.uniform(-2, 2, size=2)))
            rep = identity_suite(root_set(n, sign), z)
            # the partial-fraction side scales with n**2 / |z**n +- 1|**2
            tr.record(rep.max_discrepancy / max(1.0, n**2), n=n, sign=sign.value,
                      z=[z.real, z.imag])
    return tr.result()


def orthogonality_suite(nmax: int = 25) -> SuiteResult:
    tr = _Tracker("orthogonality", 1e-12)
    for n in range(1, nmax + 1):
        for sign in Sign:
            omega = root_set(n, sign)
            for nu in range(-3 * n, 3 * n + 1):
                diff = abs(orthogonality(omega, nu) - orthogonality_closed_form(omega, nu))
                tr.record(diff / n, n=n, sign=sign.value, nu=nu)
    return tr.result()


def ek_suite(profiles: int = 500, points: int = 100, seed: int = DEFAULT_SEED,
             slack: float = 1e-12) -> SuiteResult:
    rng = np.random.default_rng(seed)
    tr = _Tracker("ek", 0.0)
    for _ in range(profiles):
        a = random_monotone_coeffs(rng)
        prof = ek_profile(a.tolist())
        p = Polynomial(a)
        # inner region |z| <= r
        zin = prof.r * np.sqrt(rng.random(points)) * np.exp(2j * np.pi * rng.random(points))
        # outer region |z| >= R, up to 100 R
        zout = prof.R * (1 + rng.exponential(2.0, points)) * np.exp(2j * np.pi * rng.random(points))
        for z, env in [(zz, ek_envelope_inner) for zz in zin] + [(zz, ek_envelope_outer) for zz in zout]:
            lo, hi = env(prof, complex(z))
            val = abs(poly_eval(p, complex(z)))
            tol = slack * max(1.0, hi)
            excess = max(lo - val - tol, val - hi - tol, 0.0)
            tr.record(excess, coeffs=a.tolist(), z=[float(z.real), float(z.imag)],
                      envelope=env.__name__, bracket=[lo, hi], value=val)
    return tr.result()


def vieta_suite(nmax: int = 40) -> SuiteResult:
    tr = _Tracker("vieta", 1e-8)
    for n in range(1, nmax + 1):
        roots = find_roots(p_n(n)).roots
        prod = float(np.prod(np.abs(roots)))
        target = float(1 / abs(binom_half(n)))
        tr.record(abs(prod - target) / target, n=n, product=prod, target=target)
    return tr.result()


def simple_roots_suite(nmax: int = 60, min_gap: float = 1e-6) -> SuiteResult:
    tr = _Tracker("simple_roots", 0.0)
    for n in range(2, nmax + 1):
        roots = find_roots(p_n(n)).roots
        gaps = np.abs(roots[:, None] - roots[None, :])
        np.fill_diagonal(gaps, np.inf)
        gap = float(gaps.min())
        tr.record(max(0.0, min_gap - gap), n=n, min_gap=gap)
    return tr.result()


def pn_square_suite(nmax: int = 40) -> SuiteResult:
    tr = _Tracker("pn_square", 0.0)
    for n in range(nmax + 1):
        pn = p_n_exact(n)
        head = exact_mul_truncated(pn, pn, n + 1)
        bad = [k for k, c in enumerate(head) if c != 1]
        tr.record(float(len(bad)), n=n, bad_indices=bad)
    return tr.result()


def witness_suite(instances: int = 200, nmax: int = 12, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = np.random.default_rng(seed)
    tr = _Tracker("witnesses", 1e-9)
    for _ in range(instances):
        n = int(rng.integers(1, nmax + 1))
        t_half = rng.normal(size=n) + 1j * rng.normal(size=n)
        d = 2 * n - 1 + int(rng.integers(0, 4))
        plus = bool(rng.integers(0, 2))
        cert = (bound_plus if plus else bound_minus)(t_half, d)
        w = cert.witness
        norm = sup_norm_circle(w)
        attained = abs(cert.weights(w))
        res = max(abs(norm - 1), abs(attained - cert.value), max(0, w.degree - (2 * n - 2)))
        tr.record(res, n=n, d=d, sign="plus" if plus else "minus",
                  t_half=[[float(x.real), float(x.imag)] for x in t_half])
    return tr.result()


def cute_suite(nmax: int = 6, trials: int = 2000, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = np.random.default_rng(seed)
    tr = _Tracker("cute", 1e-9)
    for n in range(1, nmax + 1):
        for k in range(n):
            deg = 2 * n + k
            f = rng.normal(size=(trials, deg)) + 1j * rng.normal(size=(trials, deg))
            lhs = np.abs(f[:, k]) + np.abs(f[:, n + k])
            rhs = sup_norm_circle_many(f)
            i = int(np.argmax(lhs - rhs))
            tr.record(float(max(0.0, lhs[i] - rhs[i])), n=n, k=k,
                      coeffs=[[float(x.real), float(x.imag)] for x in f[i]])
            w = cute_witness(k, n)
            eq = abs(abs(w.coeff(k)) + abs(w.coeff(n + k)) - 1) + abs(sup_norm_circle(w) - 1)
            tr.record(eq, n=n, k=k, witness=True)
    return tr.result()


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "partition": partition_suite,
    "identities": identities_suite,
    "orthogonality": orthogonality_suite,
    "ek": ek_suite,
    "vieta": vieta_suite,
    "simple_roots": simple_roots_suite,
    "pn_square": pn_square_suite,
    "witnesses": witness_suite,
    "cute": cute_suite,
}


def run_suites(names: list[str]) -> list[SuiteResult]:
    if names == ["all"]:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[name]() for name in names]
