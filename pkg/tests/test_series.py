import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from petalstar import series as ts
from petalstar.errors import NonzeroConstantTerm, ZeroLeadingCoefficient
from petalstar.series import TruncatedSeries

Z = TruncatedSeries.identity


def close(a, expected, tol=1e-12):
    exp = np.zeros(a.order + 1, dtype=complex)
    exp[: len(expected)] = expected
    return np.allclose(a.coeffs, exp, atol=tol, rtol=0)


def test_padding_and_length():
    s = TruncatedSeries([1, 2], 5)
    assert len(s.coeffs) == 6 and s.order == 5
    assert TruncatedSeries([1, 2, 3, 4], 2).coeffs.tolist() == [1, 2, 3]


def test_coeffs_are_read_only():
    s = TruncatedSeries([1, 2], 3)
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_mul_examples():
    a = TruncatedSeries([1, 1], 3)
    b = TruncatedSeries([1, -1], 3)
    assert close(a * b, [1, 0, -1])
    c = TruncatedSeries([1, 1, 1], 4)
    assert close(c * TruncatedSeries.constant(1, 4), [1, 1, 1])


def test_result_order_is_min_of_operands():
    a = TruncatedSeries([1, 1], 7)
    b = TruncatedSeries([1, 1], 3)
    assert (a * b).order == 3 and (a + b).order == 3 and (a / b).order == 3


def test_div_examples():
    N = 4
    geo = ts.div(TruncatedSeries.constant(1, N), TruncatedSeries([1, -1], N))
    p = ts.div(TruncatedSeries([1, 1], N), TruncatedSeries([1, -1], N))  # (1+z)/(1-z)
    assert close(geo, [1, 1, 1, 1, 1])
    assert close((p - 1) / (p + 1), [0, 1])
    a = TruncatedSeries([2, 3, -1, 5], 3)
    assert close(a / a, [1])


def test_div_zero_leading():
    with pytest.raises(ZeroLeadingCoefficient):
        TruncatedSeries([1, 1], 3) / TruncatedSeries([0, 1], 3)


def test_exp_examples():
    assert close(ts.exp(TruncatedSeries([0], 4)), [1])
    assert close(ts.exp(TruncatedSeries.monomial(2, 0.5, 5)), [1, 0, 0.5, 0, 0.125])
    assert close(ts.exp(TruncatedSeries.monomial(3, 1 / 3, 7)), [1, 0, 0, 1 / 3, 0, 0, 1 / 18])


def test_exp_needs_zero_constant():
    with pytest.raises(NonzeroConstantTerm):
        ts.exp(TruncatedSeries([1, 1], 3))


def test_exp_matches_numpy_on_disk():
    a = TruncatedSeries([0, 0.3, -0.2j, 0.1], 40)
    z = 0.4 * np.exp(1j * np.linspace(0, 2 * np.pi, 9))
    assert np.allclose(ts.exp(a)(z), np.exp(a(z)), atol=1e-12)


def test_compose_examples():
    a = TruncatedSeries([0.5, 1, -2, 3], 6)
    assert a.allclose(ts.compose(a, Z(6)))
    assert ts.compose(ts.asinh_series(9), Z(9)).allclose(ts.asinh_series(9))
    got = ts.compose(ts.asinh_series(7), TruncatedSeries.monomial(3, 1.0, 7))
    assert close(got, [0, 0, 0, 1])
    with pytest.raises(NonzeroConstantTerm):
        ts.compose(a, TruncatedSeries([1, 1], 6))


def test_asinh_series_examples():
    assert close(ts.asinh_series(1), [0, 1])
    assert close(ts.asinh_series(5), [0, 1, 0, -1 / 6, 0, 3 / 40])
    assert ts.sinh(ts.asinh_series(9)).allclose(Z(9))
    assert ts.compose(ts.sinh_series(9), ts.asinh_series(9)).allclose(Z(9))


def test_asinh_matches_numpy():
    z = np.array([0.3, -0.2 + 0.25j, 0.1j])
    assert np.allclose(ts.asinh_series(60)(z), np.arcsinh(z), atol=1e-14)


def test_integrate_over_t_examples():
    assert close(ts.integrate_over_t(TruncatedSeries.monomial(2, 1.0, 4)), [0, 0, 0.5])
    g = ts.compose(ts.asinh_series(6), TruncatedSeries.monomial(2, 1.0, 6))
    assert close(ts.integrate_over_t(g), [0, 0, 0.5, 0, 0, 0, -1 / 36])
    assert close(ts.integrate_over_t(TruncatedSeries([0], 3)), [0])
    with pytest.raises(NonzeroConstantTerm):
        ts.integrate_over_t(TruncatedSeries([1], 3))


def test_shift_and_derivative():
    s = TruncatedSeries([1, 2, 3], 3)
    assert close(s.shift(1), [0, 1, 2, 3])
    assert close(s.derivative(), [2, 6])


coef = st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(st.lists(coef, min_size=2, max_size=8), st.lists(coef, min_size=2, max_size=8))
def test_mul_commutes_and_matches_convolution(a, b):
    n = 7
    A, B = TruncatedSeries(a, n), TruncatedSeries(b, n)
    assert (A * B).allclose(B * A, 1e-12)
    full = np.convolve(A.coeffs, B.coeffs)[: n + 1]
    assert np.allclose((A * B).coeffs, full, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.lists(coef, min_size=2, max_size=8), st.lists(coef, min_size=1, max_size=7))
def test_div_inverts_mul(a, rest):
    n = 7
    B = TruncatedSeries([1.0, *rest], n)
    A = TruncatedSeries(a, n)
    assert ((A / B) * B).allclose(A, 1e-9)


@settings(max_examples=40, deadline=None)
@given(st.lists(coef, min_size=1, max_size=6), st.lists(coef, min_size=1, max_size=6))
def test_exp_of_sum_is_product(a, b):
    n = 6
    A, B = TruncatedSeries([0, *a], n), TruncatedSeries([0, *b], n)
    assert ts.exp(A + B).allclose(ts.exp(A) * ts.exp(B), 1e-8)
