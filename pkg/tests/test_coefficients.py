import numpy as np
import pytest

from petalstar.caratheodory import PVector, sample_batch
from petalstar.coefficients import (CoeffVector, SchwarzSeries, coeffs_from_p, coeffs_from_p_batch,
                                    coeffs_from_schwarz, schwarz_from_p)
from petalstar.errors import InsufficientCoefficients, NonzeroConstantTerm
from petalstar.series import TruncatedSeries

W_Z = (1, 1 / 2, 1 / 9, -1 / 72)


def vec(a):
    return np.array([a[k] for k in range(2, 8)])


def test_coeffs_from_p_examples():
    a = coeffs_from_p(PVector([2] * 6))
    assert np.allclose(vec(a)[:4], W_Z, atol=1e-12)
    a = coeffs_from_p(PVector([0, 2, 0, 2, 0, 2]))
    assert np.allclose(vec(a)[:3], (0, 0.5, 0), atol=1e-12)
    assert np.allclose(vec(coeffs_from_p(PVector([0] * 6))), 0)


def test_coeffs_from_p_needs_six():
    with pytest.raises(InsufficientCoefficients):
        coeffs_from_p(PVector([2, 2, 2]))


def test_coeffs_from_schwarz_examples():
    a = coeffs_from_schwarz(SchwarzSeries.from_coeffs([1]))
    assert np.allclose(vec(a)[:4], W_Z, atol=1e-12)
    a = coeffs_from_schwarz(SchwarzSeries.from_coeffs([0, 0, 1]))
    assert np.allclose(vec(a), (0, 0, 1 / 3, 0, 0, 1 / 18), atol=1e-12)
    assert np.allclose(vec(coeffs_from_schwarz(SchwarzSeries.from_coeffs([0]))), 0)


def test_schwarz_needs_zero_constant():
    with pytest.raises(NonzeroConstantTerm):
        SchwarzSeries(TruncatedSeries([0.1, 1], 5))


def test_schwarz_from_p_examples():
    assert np.allclose(schwarz_from_p(PVector([2] * 8), 8).w.coeffs, [0, 1] + [0] * 7, atol=1e-12)
    assert np.allclose(schwarz_from_p(PVector([0, 2] * 4), 8).w.coeffs, [0, 0, 1] + [0] * 6, atol=1e-12)
    assert np.allclose(schwarz_from_p(PVector([0] * 8), 8).w.coeffs, 0)


def test_closed_forms_match_recurrence(rng):
    P = sample_batch(2000, 6, rng)
    closed = coeffs_from_p_batch(P)
    for row, a in zip(P, closed):
        rec = coeffs_from_schwarz(schwarz_from_p(PVector(row), 7))
        assert np.abs(vec(rec) - a).max() <= 1e-10


def test_a7_includes_p6_term():
    # only p6 differs, so a7 changes by p6/12 (the other a_n do not move)
    base = np.array([[0.3, 0.1j, -0.2, 0.05, 0.1, 0.0]])
    bumped = base.copy()
    bumped[0, 5] = 0.6
    d = coeffs_from_p_batch(bumped)[0] - coeffs_from_p_batch(base)[0]
    assert np.allclose(d[:5], 0) and d[5] == pytest.approx(0.6 / 12, abs=1e-15)


def test_sharp_bounds_on_samples(rng):
    A = coeffs_from_p_batch(sample_batch(20000, 6, rng))
    assert np.abs(A[:, 0]).max() <= 1 + 1e-9
    assert np.abs(A[:, 1]).max() <= 0.5 + 1e-9
    assert np.abs(A[:, 2]).max() <= 1 / 3 + 1e-9


def test_schwarz_bound_on_circle(rng):
    z = 0.8 * np.exp(2j * np.pi * np.arange(256) / 256)
    for row in sample_batch(50, 40, rng):
        w = schwarz_from_p(PVector(row, admissible=None), 40).w
        # truncation error at |z| = 0.8 with order 40 is far below the tolerance
        assert np.abs(w(z)).max() <= 0.8 + 1e-6


def test_coeff_vector_access():
    c = CoeffVector.from_sequence([1, 2, 3, 4, 5, 6])
    assert c[2] == 1 and c[7] == 6
    assert c.as_array().tolist() == [1, 1, 2, 3, 4, 5, 6]
    assert c[1] == 1
    with pytest.raises(IndexError):
        c[8]
