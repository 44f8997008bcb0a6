"""Extremal functions of the class and a sampled membership test.

A member is carried as a truncated series ``f`` with ``f(0) = 0`` and
``f'(0) = 1``.  Membership is checked on circles ``|z| = r`` against the petal
domain ``{v : |sinh(v - 1)| < 1}`` that ``z f'/f`` has to stay inside.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import series as ts
from .caratheodory import PVector
from .coefficients import CoeffVector, SchwarzSeries, schwarz_from_p
from .errors import SeriesUnreliable
from .series import TruncatedSeries
from .tolerances import DEFAULT_ORDER, MEMBERSHIP, SERIES_TAIL

__all__ = [
    "ClassMember",
    "MembershipResult",
    "extremal_fn",
    "member_from_schwarz",
    "member_from_p",
    "logderiv",
    "membership_check",
    "MEMBERSHIP_ORDER",
]

# order needed for the tail estimate to stay below 1e-4 at r = 0.95
MEMBERSHIP_ORDER = 300


@dataclass(frozen=True, eq=False)
class ClassMember:
    f: TruncatedSeries
    provenance: str

    def __post_init__(self):
        c = self.f.coeffs
        if abs(c[0]) > 1e-14 or abs(c[1] - 1) > 1e-12:
            raise ValueError("a class member needs f(0) = 0 and f'(0) = 1")

    def coeffs(self) -> CoeffVector:
        return CoeffVector.from_sequence(self.f.coeffs[2:8])


def _from_log_derivative(s_minus_1: TruncatedSeries) -> TruncatedSeries:
    # f = z exp( int_0^z (s(t) - 1) / t dt )
    return ts.exp(ts.integrate_over_t(s_minus_1)).shift(1)


def extremal_fn(n: int, order: int = DEFAULT_ORDER) -> ClassMember:
    """z exp( int_0^z asinh(t^n) / t dt ) truncated at ``order``.

    Its Schwarz function is w = z^n, so ``extremal_fn(1)`` is extremal for
    |a2|, ``extremal_fn(2)`` for |a3| and |H2,2| and ``extremal_fn(3)`` for
    |a4| and |H3,1|.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    inner = TruncatedSeries.monomial(n, 1.0, order)
    g = ts.compose(ts.asinh_series(order), inner)
    return ClassMember(_from_log_derivative(g), f"extremal({n})")


def member_from_schwarz(w: SchwarzSeries, order: int | None = None) -> ClassMember:
    wser = w.w if order is None else TruncatedSeries(w.w.coeffs, order)
    g = ts.compose(ts.asinh_series(wser.order), wser)
    return ClassMember(_from_log_derivative(g), "from_schwarz")


def member_from_p(pv: PVector, order: int = DEFAULT_ORDER) -> ClassMember:
    m = member_from_schwarz(schwarz_from_p(pv, order))
    return ClassMember(m.f, "from_p")


def logderiv(m: ClassMember) -> tuple[TruncatedSeries, TruncatedSeries]:
    """s = z f'/f and the recovered Schwarz function w = sinh(s - 1)."""
    f = m.f
    g = TruncatedSeries(f.coeffs[1:], f.order - 1)  # f / z
    zg_prime = TruncatedSeries(g.coeffs * np.arange(g.order + 1), g.order)
    s = 1 + zg_prime / g
    w = ts.sinh(s - 1)
    return s, w


@dataclass(frozen=True)
class MembershipResult:
    passed: bool
    worst_value: float  # max |sinh(s - 1)| seen
    worst_z: complex
    radii: tuple
    samples_per_circle: int

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def _tail_estimate(s: TruncatedSeries, r: float) -> float:
    c = np.abs(s.coeffs[-3:])
    n = s.order
    return float(c.max() * r ** (n + 1) / (1 - r))


def membership_check(m: ClassMember, radii=(0.5, 0.9, 0.95), samples_per_circle: int = 720) -> MembershipResult:
    """Sample ``|sinh(z f'/f - 1)| < 1`` on circles |z| = r, 0 < r < 1.

    Raises :class:`SeriesUnreliable` when the truncation tail of ``z f'/f``
    at some radius is estimated above 1e-4; build the member at a higher
    order (``MEMBERSHIP_ORDER`` is enough for r <= 0.95).
    """
    s, _ = logderiv(m)
    worst = (-np.inf, 0j)
    theta = 2 * np.pi * np.arange(samples_per_circle) / samples_per_circle
    for r in radii:
        if not 0 < r < 1:
            raise ValueError("radii must lie in (0, 1)")
        tail = _tail_estimate(s, r)
        if tail > SERIES_TAIL:
            raise SeriesUnreliable(f"tail estimate {tail:.2e} at r = {r} with order {s.order}")
        z = r * np.exp(1j * theta)
        vals = np.abs(np.sinh(s(z) - 1))
        i = int(np.argmax(vals))
        if vals[i] > worst[0]:
            worst = (float(vals[i]), complex(z[i]))
    return MembershipResult(bool(worst[0] < 1 + MEMBERSHIP), worst[0], worst[1], tuple(radii), samples_per_circle)
