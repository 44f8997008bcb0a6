from fractions import Fraction

import numpy as np
import pytest

from petalstar.caratheodory import sample_batch
from petalstar.coefficients import CoeffVector, coeffs_from_p_batch
from petalstar.errors import UnknownFunctional
from petalstar.functionals import (a6_a7_bounds, fekete_szego, h22, h23, h31, h41, h41_batch, hankel, omega_bounds,
                                   omegas, paper_bound_constants, resolve_functional)


def cv(*a):
    return CoeffVector.from_sequence(a)


def test_fekete_szego_examples():
    assert fekete_szego(cv(0, 0.5), 1).value == pytest.approx(0.5)
    assert fekete_szego(cv(1, 0.5), 0).value == pytest.approx(0.5)
    assert fekete_szego(cv(1, 1), 1).value == 0


def test_h22_examples():
    assert h22(cv(0, 0.5, 0)).value == pytest.approx(-0.25)
    assert h22(cv(1, 1, 1)).value == 0
    assert h22(cv(2, 3, 4)).value == -1


def test_h31_examples():
    assert h31(cv(0, 0, 1 / 3, 0)).value == pytest.approx(-1 / 9)
    assert h31(cv()).value == 0
    assert h31(cv(1, 1, 1, 1)).value == 0


def test_h23_examples():
    assert h23(cv(0, 0, 1 / 3, 0)).value == pytest.approx(-1 / 9)
    assert h23(cv(0, 0.5, 0, 0.125)).value == pytest.approx(1 / 16)
    assert h23(cv()).value == 0


def test_omegas_examples():
    o = [x.value for x in omegas(cv(0, 0, 1 / 3, 0, 0))]
    assert np.allclose(o, (0, 0, -1 / 27), atol=1e-15)
    assert [x.value for x in omegas(cv())] == [0, 0, 0]
    assert np.allclose([x.value for x in omegas(cv(1, 0, 0, 0, 1))], (-1, 0, 0))


def test_h41_examples():
    assert h41(cv(0, 0, 1 / 3, 0, 0, 1 / 18)).value == pytest.approx(1 / 162, abs=1e-15)
    assert h41(cv()).value == 0
    # every Hankel matrix of ones has rank one, so H4,1 and all three Omegas vanish
    assert h41(cv(1, 1, 1, 1, 1, 1)).value == 0
    assert [x.value for x in omegas(cv(1, 1, 1, 1, 1, 1))] == [0, 0, 0]


def test_abs_is_modulus():
    v = h22(cv(1j, 2, 0.5))
    assert v.abs == abs(v.value)


def test_hankel_generic_matches_named(rng):
    for _ in range(200):
        a = rng.normal(size=6) + 1j * rng.normal(size=6)
        c = cv(*a)
        assert abs(hankel(2, 2, c) - h22(c).value) <= 1e-12 * (1 + abs(h22(c).value))
        assert abs(hankel(2, 3, c) - h23(c).value) <= 1e-12 * (1 + abs(h23(c).value))
        assert abs(hankel(3, 1, c) - h31(c).value) <= 1e-12 * (1 + abs(h31(c).value))
        # 4x4 determinant oracle for the assembled H4,1
        assert abs(hankel(4, 1, c) - h41(c).value) <= 1e-12 * (1 + abs(h41(c).value)) * 100


def test_hankel_needs_enough_coefficients():
    with pytest.raises(IndexError):
        hankel(3, 4, cv(1, 2, 3))


def test_bound_audit(rng):
    A = np.ones((100000, 7), dtype=complex)
    A[:, 1:] = coeffs_from_p_batch(sample_batch(100000, 6, rng))
    c = [CoeffVector.from_sequence(r[1:]) for r in A[:3]]
    assert c  # shapes line up with the scalar API
    from petalstar.functionals import h22_batch, h23_batch, h31_batch
    assert np.abs(h22_batch(A)).max() <= 0.25 + 1e-6
    assert np.abs(h31_batch(A)).max() <= 1 / 9 + 1e-6
    assert np.abs(h23_batch(A)).max() <= 0.146048 + 1e-6
    assert np.abs(h41_batch(A)).max() <= 0.428001 + 1e-6


def test_constants():
    om = omega_bounds()
    assert om["omega1"].value == pytest.approx(0.820011, abs=1e-6)
    assert om["omega2"].value == pytest.approx(0.360465, abs=1e-6)
    assert om["omega3"].value == pytest.approx(0.606922, abs=1e-6)
    aa = a6_a7_bounds()
    assert Fraction(aa["a6"].exact) == Fraction(146, 225)
    assert Fraction(aa["a7_proof"].exact) == Fraction(1791448, 2073600)
    assert Fraction(aa["a7_stated"].exact) == Fraction(1031, 1080)
    names = [c.name for c in paper_bound_constants()]
    assert len(names) == len(set(names)) and "h41_assembly" in names


def test_resolve_functional():
    assert resolve_functional("h31").sharp_bound == pytest.approx(1 / 9)
    fs = resolve_functional("fs:0.5")
    A = np.array([[1, 1, 0.5, 0, 0, 0, 0]], dtype=complex)
    assert fs.batch(A)[0] == 0
    with pytest.raises(UnknownFunctional):
        resolve_functional("bogus")
    with pytest.raises(UnknownFunctional):
        resolve_functional("fs:abc")
