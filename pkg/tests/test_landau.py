import math
from fractions import Fraction

import numpy as np
import pytest

from coeffbound.landau import (
    DECAY_K,
    binom_half,
    calibrate_decay_constant,
    landau_bound,
    landau_values,
    near_extremal,
    p_n,
    p_n_exact,
    taylor_f_n,
)
from coeffbound.polykernel import Polynomial, exact_mul_truncated, poly_eval, poly_mul_truncated, sup_norm_circle


def landau_oracle(n: int) -> Fraction:
    return sum(Fraction(math.comb(2 * k, k), 4**k) ** 2 for k in range(n + 1))


def taylor_oracle(n: int, m: int) -> list[Fraction]:
    """Long division of rev(P_n) by P_n in exact arithmetic."""
    p = [Fraction(math.comb(2 * k, k), 4**k) for k in range(n + 1)]
    num = p[::-1] + [Fraction(0)] * m
    out = []
    for k in range(m):
        q = num[k] / p[0]
        out.append(q)
        for j, pj in enumerate(p):
            if k + j < len(num):
                num[k + j] -= q * pj
    return out


@pytest.mark.parametrize("nu, expected", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(3, 8)), (3, Fraction(-5, 16))])
def test_binom_half(nu, expected):
    assert binom_half(nu) == expected


def test_binom_half_matches_product_form():
    for nu in range(1, 30):
        prod = Fraction(1)
        for j in range(1, nu + 1):
            prod *= Fraction(2 * j - 1, 2 * j)
        assert binom_half(nu) == (-1) ** nu * prod


@pytest.mark.parametrize("n, expected", [(0, Fraction(1)), (1, Fraction(5, 4)), (2, Fraction(89, 64))])
def test_landau_examples(n, expected):
    b = landau_bound(n)
    assert b.value_exact == expected
    assert b.value_float == float(expected)


def test_landau_exactness():
    assert 64 * landau_bound(2).value_exact == 89
    assert (64 * landau_bound(2).value_exact).denominator == 1


@pytest.mark.parametrize("n", [3, 10, 57, 200])
def test_landau_against_direct_sum(n):
    assert landau_bound(n).value_exact == landau_oracle(n)


def test_landau_monotone_and_at_least_one():
    vals = landau_values(100)
    assert vals[0] == 1.0
    assert np.all(np.diff(vals) > 0)


def test_landau_values_rounded_once():
    vals = landau_values(40)
    assert all(vals[n] == float(landau_oracle(n)) for n in range(41))


@pytest.mark.parametrize("n", [10, 100, 1000, 5000])
def test_landau_log_asymptotics(n):
    assert abs(landau_bound(n).value_float - math.log(n) / math.pi) <= 1.1


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        landau_bound(-1)
    with pytest.raises(ValueError):
        binom_half(-1)


# ---------------------------------------------------------------- P_n

def test_p_n_examples():
    assert p_n(0) == Polynomial([1])
    assert p_n(2).allclose(Polynomial([1, 0.5, 0.375]), atol=0)
    assert p_n_exact(2) == [1, Fraction(1, 2), Fraction(3, 8)]


def test_p_n_ratios():
    c = p_n_exact(30)
    for nu in range(30):
        assert c[nu] / c[nu + 1] == Fraction(2 * nu + 2, 2 * nu + 1)
    assert all(x > 0 for x in c)


@pytest.mark.parametrize("n", range(0, 41))
def test_p_n_square_head(n):
    pn = p_n_exact(n)
    assert exact_mul_truncated(pn, pn, n + 1) == [1] * (n + 1)


# ---------------------------------------------------------------- Taylor coefficients of f_n

def test_taylor_n1():
    t = taylor_f_n(1, 3)
    assert t.coeffs[0] == pytest.approx(0.5)
    assert t.coeffs[1] == pytest.approx(0.75)


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_taylor_exact_mode_matches_oracle(n):
    t = taylor_f_n(n, 60, exact=True)
    assert list(t.exact) == taylor_oracle(n, 60)
    assert np.allclose(t.coeffs, [float(x) for x in t.exact], atol=1e-13)


def test_taylor_exact_mode_limit():
    with pytest.raises(ValueError):
        taylor_f_n(3, 201, exact=True)


@pytest.mark.parametrize("n", range(1, 13))
def test_taylor_head_sums_to_landau(n):
    b = taylor_f_n(n, n + 1).coeffs
    assert math.fsum(b) == pytest.approx(landau_bound(n).value_float, abs=1e-10)


@pytest.mark.parametrize("n", range(1, 13))
def test_taylor_constant_term(n):
    # f_n(0) = rev(P_n)(0) / P_n(0) = C(2n, n) / 4**n
    assert taylor_f_n(n, 1).coeffs[0] == pytest.approx(math.comb(2 * n, n) / 4**n, abs=1e-15)


@pytest.mark.parametrize("n, m", [(1, 50), (4, 300), (10, 300)])
def test_taylor_consistency(n, m):
    b = Polynomial(taylor_f_n(n, m).coeffs)
    prod = poly_mul_truncated(p_n(n), b, m)
    target = np.zeros(m)
    target[: n + 1] = p_n(n).coeffs.real[::-1]
    got = np.zeros(m, dtype=complex)
    got[: len(prod.coeffs)] = prod.coeffs
    assert np.abs(got - target).max() <= 1e-10


def test_decay_envelope_example():
    b = taylor_f_n(4, 201).coeffs
    assert abs(b[200]) <= DECAY_K * 16 * (1 + 1 / 16) ** -200


def test_decay_envelope_all_coefficients():
    for n in (1, 2, 5, 15, 30):
        b = taylor_f_n(n, 2001).coeffs
        nu = np.arange(b.size)
        assert np.all(np.abs(b) <= DECAY_K * n**2 * (1 + 1 / (4 * n)) ** (-nu))


def test_decay_calibration_headroom():
    worst, n, nu = calibrate_decay_constant(nmax=8, numax=400)
    assert worst == pytest.approx(0.9375)
    assert (n, nu) == (1, 1)
    assert DECAY_K >= 2 * worst


@pytest.mark.parametrize("n", range(1, 11))
def test_f_n_unimodular_on_circle(n):
    rng = np.random.default_rng(n)
    z = np.exp(2j * np.pi * rng.random(200))
    p = p_n(n)
    ratio = np.abs(poly_eval(p.reversed(), z)) / np.abs(poly_eval(p, z))
    assert np.abs(ratio - 1).max() <= 1e-12


# ---------------------------------------------------------------- near-extremal polynomial

def test_near_extremal_small():
    ne = near_extremal(1, 2)
    assert ne.poly.degree == 1
    assert ne.poly.allclose(Polynomial([0.5, 0.75]) / 1.25, atol=1e-12)
    assert abs(ne.coeff_sum_head) == pytest.approx(1.0, abs=1e-10)
    assert abs(ne.coeff_sum_head) <= 1.25


@pytest.mark.parametrize("n, d", [(1, 2), (2, 3), (2, 50), (3, 40), (5, 120)])
def test_near_extremal_normalised(n, d):
    ne = near_extremal(n, d)
    assert ne.poly.degree < d
    assert sup_norm_circle(ne.poly) == pytest.approx(1.0, abs=2e-10)
    assert ne.coeff_sum_head == pytest.approx(math.fsum(ne.poly.coeffs[: n + 1].real), abs=1e-12)
    assert abs(ne.coeff_sum_head) <= landau_bound(n).value_float + 1e-12


def test_near_extremal_n2_d200():
    ne = near_extremal(2, 200)
    assert abs(ne.coeff_sum_head) >= 0.999 * landau_bound(2).value_float


def test_near_extremal_requires_d_above_n():
    with pytest.raises(ValueError):
        near_extremal(3, 3)
