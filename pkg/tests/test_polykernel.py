from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coeffbound.landau import p_n
from coeffbound.polykernel import (
    Polynomial,
    contour_coeff_sum,
    exact_mul_truncated,
    exact_series_invert,
    poly_eval,
    poly_mul_truncated,
    series_invert,
    sup_norm_circle,
    sup_norm_circle_many,
)

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)


def dense_max(p: Polynomial, count: int = 1 << 20) -> float:
    """Brute-force oracle: |p| on a very fine grid."""
    z = np.exp(2j * np.pi * np.arange(count) / count)
    return float(np.abs(np.polyval(p.coeffs[::-1], z)).max()) if not p.is_zero else 0.0


def convolve(a, b):
    out = [0j] * (len(a) + len(b) - 1) if len(a) and len(b) else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# ---------------------------------------------------------------- Polynomial

def test_trailing_zeros_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert list(p.coeffs) == [1, 2]


def test_zero_polynomial_is_empty():
    z = Polynomial([0, 0])
    assert z.is_zero and z.degree == -1 and len(z.coeffs) == 0
    assert Polynomial() == z


def test_coefficients_are_read_only():
    p = Polynomial([1, 2])
    with pytest.raises(ValueError):
        p.coeffs[0] = 5


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        Polynomial([1, float("nan")])
    with pytest.raises(ValueError):
        Polynomial([float("inf")])


def test_arithmetic():
    a = Polynomial([1, 1])
    b = Polynomial([1, -1])
    assert a * b == Polynomial([1, 0, -1])
    assert a + b == Polynomial([2])
    assert a - a == Polynomial()
    assert (a * 2) / 2 == a
    assert Polynomial.monomial(3).degree == 3


def test_reversed():
    p = Polynomial([1, 2, 3])
    assert p.reversed() == Polynomial([3, 2, 1])
    assert p.reversed(4) == Polynomial([0, 0, 3, 2, 1])


# ---------------------------------------------------------------- poly_eval

@pytest.mark.parametrize("p, z, expected", [
    (Polynomial([1, 1]), 1, 2),
    (Polynomial(), 0.3 + 2j, 0),
    (p_n(2), 1, 1.875),
])
def test_poly_eval_examples(p, z, expected):
    assert poly_eval(p, z) == pytest.approx(expected, abs=1e-15)


@given(st.lists(complexes, min_size=1, max_size=12), complexes)
def test_poly_eval_matches_numpy(coeffs, z):
    p = Polynomial(coeffs)
    ref = np.polyval(np.array(coeffs, dtype=complex)[::-1], z)
    assert abs(poly_eval(p, z) - ref) <= 1e-9 * (1 + np.abs(coeffs).sum() * max(1, abs(z)) ** len(coeffs))


def test_poly_eval_vectorised():
    p = Polynomial([1, 2, 3])
    z = np.array([0, 1, -1, 1j])
    assert np.allclose(poly_eval(p, z), [1, 6, 2, 1 + 2j - 3])


# ---------------------------------------------------------------- sup_norm_circle

@pytest.mark.parametrize("k", [0, 1, 5, 37])
def test_supnorm_monomial(k):
    assert sup_norm_circle(Polynomial.monomial(k)) == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("coeffs, expected", [([1, 1], 2.0), ([1, 1, 1], 3.0), ([], 0.0)])
def test_supnorm_examples(coeffs, expected):
    assert sup_norm_circle(Polynomial(coeffs)) == pytest.approx(expected, rel=1e-10, abs=0)


def test_supnorm_rejects_bad_tol():
    with pytest.raises(ValueError):
        sup_norm_circle(Polynomial([1]), tol=0)


@pytest.mark.parametrize("seed", range(10))
def test_supnorm_against_dense_sampling(seed):
    rng = np.random.default_rng(seed)
    deg = int(rng.integers(1, 40))
    p = Polynomial(rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1))
    est = sup_norm_circle(p)
    ref = dense_max(p)
    # never below a sampled value; never far above the truth
    assert est >= ref * (1 - 1e-12)
    assert est <= ref * (1 + 1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_supnorm_triangle_inequality(seed):
    rng = np.random.default_rng(seed)
    p = Polynomial(rng.normal(size=21) + 1j * rng.normal(size=21))
    q = Polynomial(rng.normal(size=int(rng.integers(1, 22))))
    tol = 1e-10
    sp, sq = sup_norm_circle(p, tol), sup_norm_circle(q, tol)
    assert sup_norm_circle(p + q, tol) <= sp + sq + 3 * tol * (sp + sq)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), complexes, st.integers(-250, 250))
def test_supnorm_homogeneous(seed, c, e):
    c = c * 10.0**e
    rng = np.random.default_rng(seed)
    p = Polynomial(rng.normal(size=15) + 1j * rng.normal(size=15))
    assert sup_norm_circle(p * c) == pytest.approx(abs(c) * sup_norm_circle(p), rel=1e-10)


def test_sup_norm_many_matches_rows():
    rng = np.random.default_rng(1)
    f = rng.normal(size=(600, 9)) + 1j * rng.normal(size=(600, 9))
    f[3] = 0
    f[7] *= 1e-300
    got = sup_norm_circle_many(f)
    assert got.shape == (600,) and got[3] == 0
    for row, g in zip(f[:60], got[:60]):
        assert g == (sup_norm_circle(Polynomial(row)) if row.any() else 0.0)
    # dense sampling never beats the refined value
    z = np.exp(2j * np.pi * np.arange(1 << 14) / (1 << 14))
    dense = np.abs(np.polynomial.polynomial.polyval(z, f[-5:].T)).max(axis=1)
    assert np.all(dense <= got[-5:] * (1 + 1e-12))
    assert np.all(dense >= got[-5:] * (1 - 1e-6))


def test_sup_norm_many_edge_shapes():
    assert sup_norm_circle_many(np.array([[2 - 1j], [0]])).tolist() == [abs(2 - 1j), 0.0]
    assert sup_norm_circle_many(np.zeros((3, 0))).tolist() == [0.0, 0.0, 0.0]
    with pytest.raises(ValueError):
        sup_norm_circle_many(np.array([[1, np.nan]]))
    with pytest.raises(ValueError):
        sup_norm_circle_many(np.ones((2, 2)), tol=0)


# ---------------------------------------------------------------- series inversion

@pytest.mark.parametrize("coeffs, terms, expected", [
    ([1, -1], 4, [1, 1, 1, 1]),
    ([1], 3, [1]),
    ([1, 1], 4, [1, -1, 1, -1]),
])
def test_series_invert_examples(coeffs, terms, expected):
    assert series_invert(Polynomial(coeffs), terms).allclose(Polynomial(expected), atol=1e-15)


def test_series_invert_requires_unit_constant():
    with pytest.raises(ZeroDivisionError, match="non-invertible series"):
        series_invert(Polynomial([0, 1]), 3)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 64))
def test_series_invert_round_trip(seed, m):
    rng = np.random.default_rng(seed)
    deg = int(rng.integers(0, 17))
    c = (rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)) * 0.3
    c[0] = rng.choice([-1, 1]) * rng.uniform(0.5, 2.0)
    p = Polynomial(c)
    prod = poly_mul_truncated(p, series_invert(p, m), m)
    target = np.zeros(m, dtype=complex)
    target[0] = 1
    got = np.zeros(m, dtype=complex)
    got[: len(prod.coeffs)] = prod.coeffs
    assert np.abs(got - target).max() <= 1e-12 * max(1.0, np.abs(series_invert(p, m).coeffs).max())


def test_exact_series_invert_matches_float():
    a = [Fraction(1), Fraction(1, 2), Fraction(3, 8)]
    exact = exact_series_invert(a, 30)
    approx = series_invert(Polynomial([float(x) for x in a]), 30).coeffs
    assert np.allclose([float(x) for x in exact], approx, atol=1e-14)
    head = exact_mul_truncated(a, exact, 30)
    assert head == [1] + [0] * 29


# ---------------------------------------------------------------- truncated product

@pytest.mark.parametrize("p, q, terms, expected", [
    (Polynomial([1, 1]), Polynomial([1, -1]), 3, Polynomial([1, 0, -1])),
    (Polynomial([1, 2, 3]), Polynomial(), 5, Polynomial()),
])
def test_mul_truncated_examples(p, q, terms, expected):
    assert poly_mul_truncated(p, q, terms) == expected


def test_pn_square_head():
    p = p_n(2)
    assert poly_mul_truncated(p, p, 3).allclose(Polynomial([1, 1, 1]), atol=1e-15)


@given(st.lists(complexes, max_size=8), st.lists(complexes, max_size=8), st.integers(1, 20))
def test_mul_truncated_matches_convolution(a, b, terms):
    got = poly_mul_truncated(Polynomial(a), Polynomial(b), terms)
    ref = Polynomial(convolve(a, b)[:terms])
    assert got.allclose(ref, atol=1e-10)


# ---------------------------------------------------------------- contour extraction

def test_contour_examples():
    assert contour_coeff_sum(Polynomial([1, 2]), Polynomial([1]), 1, 8) == pytest.approx(2, abs=1e-14)
    kernel = p_n(1) * p_n(1)
    f = Polynomial([1, 1, 1, 1])
    assert contour_coeff_sum(f, kernel, 1, 16) == pytest.approx(2, abs=1e-14)
    # direct convolution oracle
    assert convolve([1, 1, 1, 1], list(kernel.coeffs))[1] == pytest.approx(2)
    assert contour_coeff_sum(Polynomial(), kernel, 1, 16) == 0


def test_contour_aliasing_guard():
    with pytest.raises(ValueError, match="aliasing"):
        contour_coeff_sum(Polynomial([1, 1, 1]), Polynomial([1, 1]), 2, 5)


@pytest.mark.parametrize("seed", range(5))
def test_contour_recovers_every_coefficient(seed):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=11) + 1j * rng.normal(size=11)
    f = Polynomial(c)
    for k in range(11):
        assert abs(contour_coeff_sum(f, Polynomial([1]), k, 32) - c[k]) <= 1e-12
