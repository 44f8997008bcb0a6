import numpy as np
import pytest

from petalstar.caratheodory import PVector
from petalstar.coefficients import SchwarzSeries, coeffs_from_schwarz
from petalstar.errors import SeriesUnreliable
from petalstar.extremal import (MEMBERSHIP_ORDER, ClassMember, extremal_fn, logderiv, member_from_p,
                                member_from_schwarz, membership_check)
from petalstar.functionals import fekete_szego, h22, h31
from petalstar.series import TruncatedSeries


def test_extremal_examples():
    assert np.allclose(extremal_fn(2, 6).f.coeffs, [0, 1, 0, 0.5, 0, 0.125, 0], atol=1e-12)
    assert np.allclose(extremal_fn(3, 8).f.coeffs, [0, 1, 0, 0, 1 / 3, 0, 0, 1 / 18, 0], atol=1e-12)
    assert np.allclose(extremal_fn(8, 7).f.coeffs, [0, 1, 0, 0, 0, 0, 0, 0], atol=1e-15)


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_with_schwarz(n):
    w = SchwarzSeries(TruncatedSeries.monomial(n, 1.0, 12))
    assert extremal_fn(n).coeffs().allclose(coeffs_from_schwarz(w), 1e-12)


def test_extremal_values():
    assert h31(extremal_fn(3).coeffs()).value == pytest.approx(-1 / 9, abs=1e-12)
    assert h22(extremal_fn(2).coeffs()).value == pytest.approx(-1 / 4, abs=1e-12)
    assert fekete_szego(extremal_fn(2).coeffs(), 1).value == pytest.approx(0.5, abs=1e-12)


def test_logderiv_examples():
    s, w = logderiv(extremal_fn(3, 12))
    assert np.allclose(s.coeffs[:10], [1, 0, 0, 1, 0, 0, 0, 0, 0, -1 / 6], atol=1e-12)
    assert np.allclose(w.coeffs, TruncatedSeries.monomial(3, 1.0, w.order).coeffs, atol=1e-12)
    s, w = logderiv(ClassMember(TruncatedSeries([0, 1], 8), "identity"))
    assert s.order == 7 and np.allclose(s.coeffs, [1] + [0] * 7) and np.allclose(w.coeffs, 0)
    _, w = logderiv(member_from_p(PVector([2] * 10), 10))
    assert np.allclose(w.coeffs, TruncatedSeries.identity(w.order).coeffs, atol=1e-12)


def test_member_from_schwarz_matches_extremal():
    m = member_from_schwarz(SchwarzSeries(TruncatedSeries.monomial(2, 1.0, 10)))
    assert m.f.allclose(extremal_fn(2, 10).f)


def test_class_member_normalisation():
    with pytest.raises(ValueError):
        ClassMember(TruncatedSeries([0, 2], 4), "bad")


@pytest.mark.parametrize("n", range(2, 7))
def test_extremals_are_members(n):
    res = membership_check(extremal_fn(n, MEMBERSHIP_ORDER))
    assert res.passed and res.worst_value < 1 + 1e-6


def test_membership_examples():
    assert membership_check(extremal_fn(2, MEMBERSHIP_ORDER), radii=(0.5, 0.9)).passed
    koebe = ClassMember(TruncatedSeries(np.arange(MEMBERSHIP_ORDER + 1), MEMBERSHIP_ORDER), "koebe")
    res = membership_check(koebe, radii=(0.9,))
    assert not res.passed and res.verdict == "fail"
    assert membership_check(ClassMember(TruncatedSeries([0, 1], 20), "z")).passed


def test_membership_tail_guard():
    with pytest.raises(SeriesUnreliable):
        membership_check(extremal_fn(1, 12))
    with pytest.raises(ValueError):
        membership_check(extremal_fn(2, MEMBERSHIP_ORDER), radii=(1.0,))
